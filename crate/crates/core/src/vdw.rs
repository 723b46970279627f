//! Colorings of integer intervals and monochromatic arithmetic progressions.
//!
//! `W'(m, n)` is the least `N` such that every `m`-coloring of `1..=N` has,
//! summed over the colors, longest monochromatic progressions totalling at
//! least `n`. A color that does not occur contributes 0; a lone element is a
//! progression of length 1.

use serde::{Deserialize, Serialize};

use crate::coloring::{letters, parse_letters, MAX_COLORS};
use crate::error::{Error, Result};
use crate::search::{find_threshold, Mode, Parameters, SearchOptions, Threshold};

/// An `m`-coloring of `1..=N`; `colors[i]` is the color of `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntervalColoring {
    m: usize,
    colors: Vec<u8>,
}

impl IntervalColoring {
    pub fn new(m: usize, colors: Vec<u8>) -> Result<Self> {
        check_colors(m)?;
        if colors.is_empty() {
            return Err(Error::SizeUnsupported(0));
        }
        if let Some(&c) = colors.iter().find(|&&c| c as usize >= m) {
            return Err(Error::InvalidColor { color: c as usize, m });
        }
        Ok(IntervalColoring { m, colors })
    }

    pub fn monochromatic(len: usize, m: usize) -> Result<Self> {
        Self::new(m, vec![0; len])
    }

    /// One letter per integer: `a..h` for colors `0..7`. With `m == 2` the
    /// letters `b` (color 0) and `w` (color 1) are also accepted, so
    /// `bbwbb` reads as `aabaa`.
    pub fn from_text(text: &str, m: usize) -> Result<Self> {
        let colors = if m == 2 && text.contains('w') {
            text.bytes()
                .enumerate()
                .map(|(offset, b)| match b {
                    b'b' => Ok(0),
                    b'w' => Ok(1),
                    _ => Err(Error::Parse {
                        offset,
                        reason: format!("expected 'b' or 'w', found {:?}", b as char),
                    }),
                })
                .collect::<Result<Vec<u8>>>()?
        } else {
            parse_letters(text, m)?
        };
        Self::new(m, colors)
    }

    pub fn to_text(&self) -> String {
        letters(&self.colors)
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    /// Position `k` is the `k`-th base-`m` digit of the index.
    pub fn from_index(len: usize, m: usize, mut code: u64) -> Result<Self> {
        check_colors(m)?;
        let mut colors = vec![0u8; len];
        for c in colors.iter_mut() {
            *c = (code % m as u64) as u8;
            code /= m as u64;
        }
        if code != 0 {
            return Err(Error::InvalidParameter("interval coloring index out of range".into()));
        }
        Self::new(m, colors)
    }

    pub fn index(&self) -> Option<u64> {
        self.colors
            .iter()
            .rev()
            .try_fold(0u64, |acc, &c| acc.checked_mul(self.m as u64)?.checked_add(c as u64))
    }

    pub fn reversed(&self) -> Self {
        let mut colors = self.colors.clone();
        colors.reverse();
        IntervalColoring { m: self.m, colors }
    }
}

fn check_colors(m: usize) -> Result<()> {
    if (1..=MAX_COLORS).contains(&m) {
        Ok(())
    } else {
        Err(Error::ColorsUnsupported(m))
    }
}

/// `m^len`, or `None` if it does not fit a `u64`.
pub fn interval_coloring_count(len: usize, m: usize) -> Option<u64> {
    (m as u64).checked_pow(u32::try_from(len).ok()?)
}

/// Elements in the longest arithmetic progression of the given color.
pub fn longest_mono_ap(c: &IntervalColoring, color: usize) -> usize {
    let cs = &c.colors;
    let n = cs.len();
    let mut best = 0;
    for start in 0..n {
        if cs[start] as usize != color {
            continue;
        }
        best = best.max(1);
        for d in 1..n {
            // no progression from here can beat `best`
            if start + best * d >= n {
                break;
            }
            let mut len = 1;
            let mut next = start + d;
            while next < n && cs[next] as usize == color {
                len += 1;
                next += d;
            }
            best = best.max(len);
        }
    }
    best
}

/// Sum over colors of the longest monochromatic progression, and the
/// per-color lengths.
pub fn rho_w(c: &IntervalColoring) -> (usize, Vec<usize>) {
    let lengths: Vec<usize> = (0..c.m).map(|k| longest_mono_ap(c, k)).collect();
    (lengths.iter().sum(), lengths)
}

/// Least `N` such that every `m`-coloring of `1..=N` has progression sum
/// at least `n`, with the failing coloring at `N - 1` and the exhaustive
/// scan at `N`.
pub fn w_prime_search(m: usize, n: u64, opts: &SearchOptions) -> Result<Threshold> {
    check_colors(m)?;
    find_threshold(Mode::WPrime { m }, n, opts, None)
}

/// Whether every `m`-coloring of `1..=len` has a single-color progression of
/// at least `n` elements.
pub fn w_classical_check(m: usize, n: u64, len: usize, opts: &SearchOptions) -> Result<bool> {
    check_colors(m)?;
    let params = Parameters {
        mode: Mode::WClassical { m },
        target: n,
        size: len,
    };
    Ok(crate::search::check_universal(&params, opts)?.holds())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::collections::BTreeSet;

    /// Longest progression found from every pair of positions of the color.
    fn oracle_longest(c: &IntervalColoring, color: usize) -> usize {
        let members: BTreeSet<usize> = (0..c.len()).filter(|&i| c.colors()[i] as usize == color).collect();
        let mut best = usize::from(!members.is_empty());
        for &x in &members {
            for &y in members.range(x + 1..) {
                let d = y - x;
                let len = (0..).take_while(|k| members.contains(&(x + k * d))).count();
                best = best.max(len);
            }
        }
        best
    }

    #[test]
    fn bbwbb() {
        let c = IntervalColoring::from_text("bbwbb", 2).unwrap();
        assert_eq!(c.to_text(), "aabaa");
        assert_eq!(longest_mono_ap(&c, 0), 2);
        assert_eq!(longest_mono_ap(&c, 1), 1);
        assert_eq!(rho_w(&c), (3, vec![2, 1]));
    }

    #[test]
    fn trivial_cases() {
        let all_black = IntervalColoring::monochromatic(6, 2).unwrap();
        assert_eq!(longest_mono_ap(&all_black, 0), 6);
        assert_eq!(rho_w(&all_black).0, 6);
        for m in 2..=4 {
            let one = IntervalColoring::monochromatic(1, m).unwrap();
            let (v, profile) = rho_w(&one);
            assert_eq!(v, 1);
            assert!(profile.contains(&0));
        }
    }

    #[test]
    fn agrees_with_index_set_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10_000 {
            let len = rng.gen_range(1..=24);
            let m = rng.gen_range(1..=4);
            let colors = (0..len).map(|_| rng.gen_range(0..m) as u8).collect();
            let c = IntervalColoring::new(m, colors).unwrap();
            for k in 0..m {
                assert_eq!(longest_mono_ap(&c, k), oracle_longest(&c, k), "{}", c.to_text());
            }
        }
    }

    #[test]
    fn symmetries() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..500 {
            let len = rng.gen_range(1..=16);
            let c = IntervalColoring::new(3, (0..len).map(|_| rng.gen_range(0..3)).collect()).unwrap();
            assert_eq!(rho_w(&c).0, rho_w(&c.reversed()).0);
            let permuted = IntervalColoring::new(3, c.colors().iter().map(|&x| (x + 1) % 3).collect()).unwrap();
            assert_eq!(rho_w(&c).0, rho_w(&permuted).0);
            let nonempty = (0..3).filter(|&k| c.colors().contains(&(k as u8))).count();
            assert!(rho_w(&c).0 >= nonempty);
        }
    }

    #[test]
    fn text_and_index() {
        assert!(matches!(
            IntervalColoring::from_text("bwx", 2),
            Err(Error::Parse { offset: 2, .. })
        ));
        assert!(matches!(
            IntervalColoring::from_text("abc", 2),
            Err(Error::Parse { offset: 2, .. })
        ));
        assert!(IntervalColoring::from_text("", 2).is_err());
        let c = IntervalColoring::from_text("aabaa", 2).unwrap();
        assert_eq!(c.index(), Some(4));
        assert_eq!(IntervalColoring::from_index(5, 2, 4).unwrap(), c);
    }

    #[test]
    fn small_w_prime_values() {
        let opts = SearchOptions::default();
        let values: Vec<_> = (1..=4).map(|n| w_prime_search(2, n, &opts).unwrap().value).collect();
        assert_eq!(values, vec![1, 2, 3, 6]);
        let t = w_prime_search(2, 4, &opts).unwrap();
        assert_eq!(t.lower.unwrap().witness_coloring.as_deref(), Some("aabaa"));
    }

    #[test]
    fn w_prime_two_five_is_nine() {
        // frozen from an independent exhaustive run over all 2^N colorings
        let t = w_prime_search(2, 5, &SearchOptions::default()).unwrap();
        assert_eq!(t.value, 9);
    }

    #[test]
    fn classical_checks() {
        let opts = SearchOptions::default();
        assert!(w_classical_check(2, 3, 9, &opts).unwrap());
        assert!(!w_classical_check(2, 3, 8, &opts).unwrap());
        assert!(w_classical_check(2, 2, 3, &opts).unwrap());
        assert!(!w_classical_check(2, 2, 2, &opts).unwrap());
        for n in 1..=5 {
            assert!(w_classical_check(1, n, n as usize, &opts).unwrap());
        }
    }
}
