//! Scores of monochromatic subgraphs and top-`j` aggregation over colors.
//!
//! A color class scores the best subgraph of the requested shape it
//! contains (not necessarily induced): the largest clique, the longest
//! cycle, or the path with the most vertices.

use serde::{Deserialize, Serialize};

use crate::clique::clique_number;
use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::search::{find_threshold, Mode, SearchOptions, Threshold};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScoreKind {
    /// Clique number of the class.
    CliqueSize,
    /// Length of the longest cycle (at least 3), or 0 when the class is a forest.
    LongestCycle,
    /// Vertices on the longest path; 1 for an edgeless class.
    LongestPath,
}

impl std::str::FromStr for ScoreKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "clique" | "clique_size" => Ok(ScoreKind::CliqueSize),
            "cycle" | "longest_cycle" => Ok(ScoreKind::LongestCycle),
            "path" | "longest_path" => Ok(ScoreKind::LongestPath),
            other => Err(Error::InvalidParameter(format!("unknown score kind {other:?}"))),
        }
    }
}

/// Exhaustive DFS over simple paths; exponential, meant for small classes.
fn longest_path(g: &Graph) -> usize {
    fn extend(g: &Graph, end: usize, visited: u64, len: usize, best: &mut usize) {
        *best = (*best).max(len);
        let mut next = g.adjacency()[end] & !visited;
        while next != 0 && *best < g.n() {
            let v = next.trailing_zeros() as usize;
            next &= next - 1;
            extend(g, v, visited | 1 << v, len + 1, best);
        }
    }
    let mut best = 0;
    for s in 0..g.n() {
        if best == g.n() {
            break;
        }
        extend(g, s, 1 << s, 1, &mut best);
    }
    best
}

/// Longest cycle, enumerated from its lowest vertex.
fn longest_cycle(g: &Graph) -> usize {
    fn extend(g: &Graph, start: usize, end: usize, visited: u64, len: usize, allowed: u64, best: &mut usize) {
        if len >= 3 && g.has_edge(end, start) {
            *best = (*best).max(len);
        }
        let mut next = g.adjacency()[end] & allowed & !visited;
        while next != 0 && *best < g.n() {
            let v = next.trailing_zeros() as usize;
            next &= next - 1;
            extend(g, start, v, visited | 1 << v, len + 1, allowed, best);
        }
    }
    let mut best = 0;
    for s in 0..g.n() {
        // every cycle through s with larger vertices only
        let allowed = if s >= 63 { 0 } else { u64::MAX << (s + 1) };
        if best >= g.n() - s {
            break;
        }
        extend(g, s, s, 1 << s, 1, allowed, &mut best);
    }
    best
}

pub fn score_graph(g: &Graph, kind: ScoreKind) -> usize {
    match kind {
        ScoreKind::CliqueSize => clique_number(g),
        ScoreKind::LongestCycle => longest_cycle(g),
        ScoreKind::LongestPath => longest_path(g),
    }
}

pub fn score_color_class(c: &EdgeColoring, color: usize, kind: ScoreKind) -> Result<usize> {
    if color >= c.m() {
        return Err(Error::InvalidColor { color, m: c.m() });
    }
    Ok(score_graph(&c.class_graph(color), kind))
}

/// Per-color scores.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScoreProfile {
    pub scores: Vec<usize>,
}

impl ScoreProfile {
    /// Sum of the `j` largest scores.
    pub fn aggregate(&self, j: usize) -> usize {
        let mut sorted = self.scores.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        sorted.iter().take(j).sum()
    }
}

pub fn score_profile(c: &EdgeColoring, kind: ScoreKind) -> ScoreProfile {
    ScoreProfile {
        scores: (0..c.m()).map(|i| score_graph(&c.class_graph(i), kind)).collect(),
    }
}

pub fn rho_score(c: &EdgeColoring, kind: ScoreKind, j: usize) -> Result<(usize, ScoreProfile)> {
    check_j(j, c.m())?;
    let profile = score_profile(c, kind);
    Ok((profile.aggregate(j), profile))
}

pub(crate) fn check_j(j: usize, m: usize) -> Result<()> {
    if (1..=m).contains(&j) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("j = {j} outside 1..={m}")))
    }
}

/// Least `N` such that every `m`-coloring of `K_N` has top-`j` score sum at
/// least `n`.
pub fn search_threshold_score(kind: ScoreKind, m: usize, j: usize, n: u64, opts: &SearchOptions) -> Result<Threshold> {
    check_j(j, m)?;
    let upper = if kind == ScoreKind::CliqueSize && j == m {
        crate::bounds::family_bound(n, m as u64).ok()
    } else {
        None
    };
    find_threshold(Mode::Score { score: kind, m, j }, n, opts, upper)
}
