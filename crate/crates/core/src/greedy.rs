//! Greedy extraction of a clique/independent-set pair (or of one
//! monochromatic clique per color) by repeatedly fixing a pivot and keeping
//! the larger side.
//!
//! Three procedures:
//!
//! * [`greedy_pair_proof`] keeps the neighbor side when it is at least as
//!   large as the non-neighbor side, and stops at a single vertex `v` which
//!   joins both `A` and `B`. On `N` vertices it returns
//!   `|A| + |B| >= floor(log2 N) + 2`, so `2^(k-2)` vertices always give `k`.
//! * [`greedy_pair_remark`] keeps the neighbor side only when it is strictly
//!   larger, runs while at least 4 vertices remain, and finishes on 2 or 3
//!   vertices by placing one pair in `A` or `B`. Its sets are disjoint and it
//!   returns `|A| + |B| >= floor(log2 N) + 1`.
//! * [`greedy_family_m`] splits the other vertices by the color joining them
//!   to the pivot, keeps a largest class (lowest color on ties), and ends at a
//!   single vertex placed in every part.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::rho::{WitnessFamily, WitnessPair};

/// How the next pivot is chosen among the remaining vertices.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexRule {
    #[default]
    LowestIndex,
    /// Most neighbors among the remaining vertices (for colorings: largest
    /// color class towards them); lowest index on ties.
    HighestDegree,
    SeededRandom(u64),
}

struct Picker {
    rule: VertexRule,
    rng: Option<ChaCha8Rng>,
}

impl Picker {
    fn new(rule: VertexRule) -> Self {
        let rng = match rule {
            VertexRule::SeededRandom(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
            _ => None,
        };
        Picker { rule, rng }
    }

    fn pick(&mut self, cur: VertexSet, degree: impl Fn(usize) -> usize) -> usize {
        match self.rule {
            VertexRule::LowestIndex => cur.first().expect("nonempty"),
            VertexRule::HighestDegree => {
                let mut best = None;
                for v in cur.iter() {
                    let d = degree(v);
                    if best.is_none_or(|(bd, _)| d > bd) {
                        best = Some((d, v));
                    }
                }
                best.expect("nonempty").1
            }
            VertexRule::SeededRandom(_) => {
                let rng = self.rng.as_mut().expect("seeded");
                let k = rng.gen_range(0..cur.len());
                cur.iter().nth(k).expect("k < len")
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "branch", rename_all = "snake_case")]
pub enum Branch {
    /// Pivot joined `A`; continued on its neighbors.
    Neighbors,
    /// Pivot joined `B`; continued on its non-neighbors.
    NonNeighbors,
    /// Pivot joined the given color's part; continued on that color class.
    Color { color: usize },
    /// Final pair `{vertex, other}` went to `A` if adjacent, else to `B`.
    TerminalPair { other: usize, adjacent: bool },
    /// Last remaining vertex joined every set.
    Base,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GreedyStep {
    pub vertex: usize,
    #[serde(flatten)]
    pub branch: Branch,
    /// Vertices left after this step.
    pub remaining: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GreedyTrace {
    pub rule: VertexRule,
    pub steps: Vec<GreedyStep>,
}

/// `floor(log2 n) + 2`, the size reached by [`greedy_pair_proof`].
pub fn pair_proof_guarantee(n: usize) -> usize {
    n.ilog2() as usize + 2
}

/// `floor(log2 n) + 1`, the size reached by [`greedy_pair_remark`].
pub fn pair_remark_guarantee(n: usize) -> usize {
    n.ilog2() as usize + 1
}

/// `m + k` for the largest `k` with `1 + (m^k - 1)/(m - 1) <= n`, the size
/// reached by [`greedy_family_m`].
pub fn family_guarantee(n: usize, m: usize) -> usize {
    let mut k = 0;
    // vertices needed for k + 1: 1 + m + ... + m^k
    let mut needed: u128 = 1;
    let mut power: u128 = 1;
    loop {
        needed += power;
        if needed > n as u128 {
            return m + k;
        }
        power *= m as u128;
        k += 1;
    }
}

/// Recursion from the proof: ties go to the neighbor side, and the last
/// vertex is shared by `A` and `B`.
pub fn greedy_pair_proof(g: &Graph, rule: VertexRule) -> Result<(WitnessPair, GreedyTrace)> {
    let mut picker = Picker::new(rule);
    let mut cur = g.vertices();
    let (mut a, mut b) = (VertexSet::EMPTY, VertexSet::EMPTY);
    let mut steps = Vec::new();
    while cur.len() >= 2 {
        let v = picker.pick(cur, |u| g.neighbors(u).intersection(cur).len());
        let nb = g.neighbors(v).intersection(cur);
        let non = cur.difference(nb).without(v);
        let branch = if nb.len() >= non.len() {
            a.insert(v);
            cur = nb;
            Branch::Neighbors
        } else {
            b.insert(v);
            cur = non;
            Branch::NonNeighbors
        };
        steps.push(GreedyStep {
            vertex: v,
            branch,
            remaining: cur.len(),
        });
    }
    let v = cur.first().ok_or(Error::TooSmall(0))?;
    a.insert(v);
    b.insert(v);
    steps.push(GreedyStep {
        vertex: v,
        branch: Branch::Base,
        remaining: 0,
    });
    Ok((WitnessPair::new(a, b), GreedyTrace { rule, steps }))
}

/// Loop-and-terminal form: strict "more neighbors" test, finishing on a pair
/// once 2 or 3 vertices remain. Needs at least 2 vertices.
pub fn greedy_pair_remark(g: &Graph, rule: VertexRule) -> Result<(WitnessPair, GreedyTrace)> {
    if g.n() < 2 {
        return Err(Error::TooSmall(g.n()));
    }
    let mut picker = Picker::new(rule);
    let mut cur = g.vertices();
    let (mut a, mut b) = (VertexSet::EMPTY, VertexSet::EMPTY);
    let mut steps = Vec::new();
    let degree = |cur: VertexSet| move |u: usize| g.neighbors(u).intersection(cur).len();
    while cur.len() >= 4 {
        let v = picker.pick(cur, degree(cur));
        let nb = g.neighbors(v).intersection(cur);
        let non = cur.difference(nb).without(v);
        let branch = if nb.len() > non.len() {
            a.insert(v);
            cur = nb;
            Branch::Neighbors
        } else {
            b.insert(v);
            cur = non;
            Branch::NonNeighbors
        };
        steps.push(GreedyStep {
            vertex: v,
            branch,
            remaining: cur.len(),
        });
    }
    debug_assert!((2..=3).contains(&cur.len()));
    let v = picker.pick(cur, degree(cur));
    let w = picker.pick(cur.without(v), degree(cur));
    let adjacent = g.has_edge(v, w);
    if adjacent {
        a = a.with(v).with(w);
    } else {
        b = b.with(v).with(w);
    }
    steps.push(GreedyStep {
        vertex: v,
        branch: Branch::TerminalPair { other: w, adjacent },
        remaining: 0,
    });
    Ok((WitnessPair::new(a, b), GreedyTrace { rule, steps }))
}

/// Multicolor recursion: continue on a largest color class around the pivot.
pub fn greedy_family_m(c: &EdgeColoring, rule: VertexRule) -> Result<(WitnessFamily, GreedyTrace)> {
    let m = c.m();
    let classes: Vec<Graph> = (0..m).map(|i| c.class_graph(i)).collect();
    let mut picker = Picker::new(rule);
    let mut cur = VertexSet::full(c.n());
    let mut parts = vec![VertexSet::EMPTY; m];
    let mut steps = Vec::new();
    while cur.len() >= 2 {
        let v = picker.pick(cur, |u| {
            classes
                .iter()
                .map(|g| g.neighbors(u).intersection(cur).len())
                .max()
                .unwrap_or(0)
        });
        let (color, class) = classes
            .iter()
            .map(|g| g.neighbors(v).intersection(cur))
            .enumerate()
            .fold((0, VertexSet::EMPTY), |best, (i, s)| {
                if s.len() > best.1.len() || i == 0 {
                    (i, s)
                } else {
                    best
                }
            });
        parts[color].insert(v);
        cur = class;
        steps.push(GreedyStep {
            vertex: v,
            branch: Branch::Color { color },
            remaining: cur.len(),
        });
    }
    let v = cur.first().ok_or(Error::TooSmall(0))?;
    for p in parts.iter_mut() {
        p.insert(v);
    }
    steps.push(GreedyStep {
        vertex: v,
        branch: Branch::Base,
        remaining: 0,
    });
    Ok((WitnessFamily::new(parts), GreedyTrace { rule, steps }))
}

fn replay_error(step: usize, msg: &str) -> Error {
    Error::Certificate(format!("trace step {step}: {msg}"))
}

/// Re-executes the recorded decisions of a pair trace on `g`, checking
/// every step against the graph, and returns the resulting pair.
pub fn replay_pair(g: &Graph, trace: &GreedyTrace) -> Result<WitnessPair> {
    let mut cur = g.vertices();
    let (mut a, mut b) = (VertexSet::EMPTY, VertexSet::EMPTY);
    for (k, step) in trace.steps.iter().enumerate() {
        let v = step.vertex;
        if !cur.contains(v) {
            return Err(replay_error(k, "pivot not among remaining vertices"));
        }
        let nb = g.neighbors(v).intersection(cur);
        match step.branch {
            Branch::Neighbors => {
                a.insert(v);
                cur = nb;
            }
            Branch::NonNeighbors => {
                b.insert(v);
                cur = cur.difference(nb).without(v);
            }
            Branch::TerminalPair { other, adjacent } => {
                if !cur.contains(other) || other == v || g.has_edge(v, other) != adjacent {
                    return Err(replay_error(k, "terminal pair does not match the graph"));
                }
                if adjacent {
                    a = a.with(v).with(other);
                } else {
                    b = b.with(v).with(other);
                }
                cur = VertexSet::EMPTY;
            }
            Branch::Base => {
                if cur.len() != 1 {
                    return Err(replay_error(k, "base step with more than one vertex left"));
                }
                a.insert(v);
                b.insert(v);
                cur = VertexSet::EMPTY;
            }
            Branch::Color { .. } => return Err(replay_error(k, "color branch in a pair trace")),
        }
        if cur.len() != step.remaining {
            return Err(replay_error(k, "remaining count mismatch"));
        }
    }
    if !cur.is_empty() {
        return Err(Error::Certificate("trace ends before the graph is exhausted".into()));
    }
    Ok(WitnessPair::new(a, b))
}

/// Family counterpart of [`replay_pair`].
pub fn replay_family(c: &EdgeColoring, trace: &GreedyTrace) -> Result<WitnessFamily> {
    let mut cur = VertexSet::full(c.n());
    let mut parts = vec![VertexSet::EMPTY; c.m()];
    for (k, step) in trace.steps.iter().enumerate() {
        let v = step.vertex;
        if !cur.contains(v) {
            return Err(replay_error(k, "pivot not among remaining vertices"));
        }
        match step.branch {
            Branch::Color { color } if color < c.m() => {
                parts[color].insert(v);
                cur = cur.without(v).iter().filter(|&u| c.color(u, v) == color).collect();
            }
            Branch::Base if cur.len() == 1 => {
                for p in parts.iter_mut() {
                    p.insert(v);
                }
                cur = VertexSet::EMPTY;
            }
            _ => return Err(replay_error(k, "branch does not apply")),
        }
        if cur.len() != step.remaining {
            return Err(replay_error(k, "remaining count mismatch"));
        }
    }
    if !cur.is_empty() {
        return Err(Error::Certificate("trace ends before the coloring is exhausted".into()));
    }
    Ok(WitnessFamily::new(parts))
}
