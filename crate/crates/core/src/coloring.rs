//! Complete graphs whose edges carry one of `m` colors.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{pair_count, pair_index, pairs, vertices_for_pairs, Graph, MAX_VERTICES};

pub const MIN_COLORS: usize = 2;
pub const MAX_COLORS: usize = 8;

/// Hard cap on the number of colorings any single enumeration may visit.
pub const MAX_COLORING_ENUMERATION: u64 = 1 << 40;

const ALPHABET: &[u8; 8] = b"abcdefgh";

/// An `m`-coloring of the edges of `K_n`, stored in pair order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeColoring {
    n: usize,
    m: usize,
    colors: Vec<u8>,
}

impl EdgeColoring {
    pub fn new(n: usize, m: usize, colors: Vec<u8>) -> Result<Self> {
        check_params(n, m)?;
        if colors.len() != pair_count(n) {
            return Err(Error::InvalidParameter(format!(
                "{} pair colors given for {n} vertices (expected {})",
                colors.len(),
                pair_count(n)
            )));
        }
        if let Some(&c) = colors.iter().find(|&&c| c as usize >= m) {
            return Err(Error::InvalidColor { color: c as usize, m });
        }
        Ok(EdgeColoring { n, m, colors })
    }

    /// Every pair gets `color`.
    pub fn monochromatic(n: usize, m: usize, color: usize) -> Result<Self> {
        Self::from_fn(n, m, |_, _| color)
    }

    pub fn from_fn(n: usize, m: usize, mut f: impl FnMut(usize, usize) -> usize) -> Result<Self> {
        check_params(n, m)?;
        let colors = pairs(n).map(|(i, j)| f(i, j) as u8).collect();
        Self::new(n, m, colors)
    }

    /// Two-coloring of a graph: edges get color 0, non-edges color 1.
    pub fn from_graph(g: &Graph) -> Self {
        Self::from_fn(g.n(), 2, |i, j| usize::from(!g.has_edge(i, j))).expect("valid graph")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn pair_colors(&self) -> &[u8] {
        &self.colors
    }

    pub fn color(&self, u: usize, v: usize) -> usize {
        self.colors[pair_index(u, v)] as usize
    }

    /// Spanning graph of the edges with the given color.
    pub fn class_graph(&self, color: usize) -> Graph {
        let mut g = Graph::empty(self.n).expect("n validated");
        for ((i, j), &c) in pairs(self.n).zip(&self.colors) {
            if c as usize == color {
                g.add_edge(i, j);
            }
        }
        g
    }

    /// Letters `a..h` for colors `0..7`, one per pair in pair order.
    pub fn to_text(&self) -> String {
        self.colors.iter().map(|&c| ALPHABET[c as usize] as char).collect()
    }

    /// Inverse of [`to_text`](Self::to_text); the vertex count is recovered
    /// from the string length, so an empty string is the one-vertex coloring.
    pub fn from_text(text: &str, m: usize) -> Result<Self> {
        let colors = parse_letters(text, m)?;
        let n = vertices_for_pairs(colors.len()).ok_or_else(|| Error::Parse {
            offset: text.len(),
            reason: format!("{} is not a triangular pair count", colors.len()),
        })?;
        Self::new(n, m, colors)
    }

    /// Enumeration coordinate: pair `k` is the `k`-th base-`m` digit.
    pub fn index(&self) -> Option<u64> {
        let mut code = 0u64;
        for &c in self.colors.iter().rev() {
            code = code.checked_mul(self.m as u64)?.checked_add(c as u64)?;
        }
        Some(code)
    }

    pub fn from_index(n: usize, m: usize, mut code: u64) -> Result<Self> {
        check_params(n, m)?;
        let mut colors = vec![0u8; pair_count(n)];
        for c in colors.iter_mut() {
            *c = (code % m as u64) as u8;
            code /= m as u64;
        }
        if code != 0 {
            return Err(Error::InvalidParameter("coloring index out of range".into()));
        }
        Ok(EdgeColoring { n, m, colors })
    }
}

pub(crate) fn parse_letters(text: &str, m: usize) -> Result<Vec<u8>> {
    text.bytes()
        .enumerate()
        .map(|(offset, b)| match ALPHABET.iter().position(|&a| a == b) {
            Some(c) if c < m => Ok(c as u8),
            Some(c) => Err(Error::Parse {
                offset,
                reason: format!("color {c} out of range for {m} colors"),
            }),
            None => Err(Error::Parse {
                offset,
                reason: format!("unexpected character {:?}", b as char),
            }),
        })
        .collect()
}

pub(crate) fn letters(colors: &[u8]) -> String {
    colors.iter().map(|&c| ALPHABET[c as usize] as char).collect()
}

fn check_params(n: usize, m: usize) -> Result<()> {
    if !(1..=MAX_VERTICES).contains(&n) {
        return Err(Error::SizeUnsupported(n));
    }
    if !(MIN_COLORS..=MAX_COLORS).contains(&m) {
        return Err(Error::ColorsUnsupported(m));
    }
    Ok(())
}

/// `m^(n(n-1)/2)`, refused above [`MAX_COLORING_ENUMERATION`].
pub fn edge_coloring_count(n: usize, m: usize) -> Result<u64> {
    check_params(n, m)?;
    let too_large = || Error::ExhaustionTooLarge {
        what: format!("{m}^{} edge colorings of K_{n}", pair_count(n)),
    };
    let count = (m as u64).checked_pow(pair_count(n) as u32).ok_or_else(too_large)?;
    if count > MAX_COLORING_ENUMERATION {
        return Err(too_large());
    }
    Ok(count)
}

/// Every `m`-coloring of `K_n`, in increasing index order.
pub fn enumerate_edge_colorings(n: usize, m: usize) -> Result<impl Iterator<Item = EdgeColoring>> {
    let count = edge_coloring_count(n, m)?;
    Ok((0..count).map(move |code| EdgeColoring::from_index(n, m, code).expect("in range")))
}
