//! Simple undirected graphs on at most 64 vertices, stored as one adjacency
//! bitset per vertex.
//!
//! Unordered pairs `{i, j}` with `i < j` are numbered column-major over the
//! upper triangle: `(0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...`, so the pair
//! `(i, j)` has index `j(j-1)/2 + i`. This is the graph6 bit order and the
//! order used for [`GraphIndex`] codes and [`EdgeColoring`](crate::EdgeColoring)
//! storage.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// Largest vertex count accepted by [`enumerate_labeled_graphs`].
pub const MAX_EXHAUSTIVE_VERTICES: usize = 7;

/// Number of unordered pairs on `n` vertices.
pub const fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Position of the pair `{i, j}` in the column-major upper-triangle order.
pub fn pair_index(i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    debug_assert!(i != j);
    j * (j - 1) / 2 + i
}

/// All pairs `(i, j)`, `i < j < n`, in pair order.
pub fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j)))
}

/// Inverse of [`pair_count`]: the `n` with `pair_count(n) == pairs`, if any.
pub(crate) fn vertices_for_pairs(pairs: usize) -> Option<usize> {
    (1..=MAX_VERTICES).find(|&n| pair_count(n) == pairs)
}

/// A set of vertex indices `0..64` packed into one machine word.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The set `{0, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Lowest vertex in the set.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Vertices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let vs = Vec::<usize>::deserialize(d)?;
        if let Some(&v) = vs.iter().find(|&&v| v >= 64) {
            return Err(serde::de::Error::custom(format!("vertex {v} out of range")));
        }
        Ok(vs.into_iter().collect())
    }
}

/// A simple undirected graph on `1..=64` vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        check_size(n)?;
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<Self> {
        Ok(Self::empty(n)?.complement())
    }

    /// The cycle `0 - 1 - ... - (n-1) - 0`.
    pub fn cycle(n: usize) -> Result<Self> {
        let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        Self::from_edges(n, &edges)
    }

    /// Builds a graph from an edge list; duplicate and reversed edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::InvalidVertex { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::LoopRejected(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, checking every invariant.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        check_size(n)?;
        let mask = VertexSet::full(n).0;
        for (v, &row) in adj.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::InvalidVertex {
                    vertex: (row & !mask).trailing_zeros() as usize,
                    n,
                });
            }
            if row >> v & 1 == 1 {
                return Err(Error::LoopRejected(v));
            }
            for w in VertexSet(row).iter() {
                if adj[w] >> v & 1 == 0 {
                    return Err(Error::InvalidParameter(format!(
                        "adjacency not symmetric at {{{v}, {w}}}"
                    )));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        pairs(self.n).filter(|&(i, j)| self.has_edge(i, j))
    }

    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n).0;
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(v, &row)| !row & full & !(1u64 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Subgraph induced on `s`, relabeled by the increasing map `s -> 0..|s|`.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Graph> {
        if s.is_empty() {
            return Err(Error::EmptySelection);
        }
        if !s.is_subset(self.vertices()) {
            let vertex = s.difference(self.vertices()).first().unwrap_or(0);
            return Err(Error::InvalidVertex { vertex, n: self.n });
        }
        let kept = s.to_vec();
        let mut g = Graph::empty(kept.len())?;
        for (a, &u) in kept.iter().enumerate() {
            for (b, &v) in kept.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(a, b);
                }
            }
        }
        Ok(g)
    }

    /// Every pair inside `s` is adjacent. Empty sets and singletons qualify.
    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.without(v).is_subset(self.neighbors(v)))
    }

    /// No pair inside `s` is adjacent. Empty sets and singletons qualify.
    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v] & s.0 == 0)
    }

    /// Enumeration coordinate of this graph; `None` above 11 vertices where
    /// the pair count exceeds one word.
    pub fn index(&self) -> Option<GraphIndex> {
        if pair_count(self.n) > 64 {
            return None;
        }
        let code = pairs(self.n)
            .enumerate()
            .filter(|&(_, (i, j))| self.has_edge(i, j))
            .fold(0u64, |acc, (k, _)| acc | 1 << k);
        Some(GraphIndex { n: self.n, code })
    }

    pub fn from_index(index: GraphIndex) -> Result<Graph> {
        let mut g = Graph::empty(index.n)?;
        if pair_count(index.n) > 64 {
            return Err(Error::SizeUnsupported(index.n));
        }
        for (k, (i, j)) in pairs(index.n).enumerate() {
            if index.code >> k & 1 == 1 {
                g.add_edge(i, j);
            }
        }
        Ok(g)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

fn check_size(n: usize) -> Result<()> {
    if (1..=MAX_VERTICES).contains(&n) {
        Ok(())
    } else {
        Err(Error::SizeUnsupported(n))
    }
}

/// A labeled graph as an integer: bit `k` of `code` is the `k`-th pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GraphIndex {
    pub n: usize,
    pub code: u64,
}

/// Number of labeled graphs on `n` vertices, if enumerable.
pub fn labeled_graph_count(n: usize) -> Result<u64> {
    if n == 0 {
        return Err(Error::SizeUnsupported(n));
    }
    if n > MAX_EXHAUSTIVE_VERTICES {
        return Err(Error::ExhaustionTooLarge {
            what: format!("2^{} labeled graphs on {n} vertices", pair_count(n)),
        });
    }
    Ok(1u64 << pair_count(n))
}

/// Every labeled graph on `n` vertices in increasing [`GraphIndex`] order.
pub fn enumerate_labeled_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    let count = labeled_graph_count(n)?;
    Ok(graphs_in_range(n, 0..count))
}

/// The labeled graphs whose codes fall in `range`, for sharded scans.
pub fn graphs_in_range(n: usize, range: std::ops::Range<u64>) -> impl Iterator<Item = Graph> {
    range.map(move |code| Graph::from_index(GraphIndex { n, code }).expect("n validated"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn from_edges_examples() {
        let g = Graph::from_edges(3, &[]).unwrap();
        assert_eq!(g.edge_count(), 0);
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert!((0..5).all(|v| c5.degree(v) == 2));
        assert_eq!(c5, Graph::cycle(5).unwrap());
        let k2 = Graph::from_edges(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(k2.edge_count(), 1);
    }

    #[test]
    fn from_edges_errors() {
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(Error::InvalidVertex { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(Error::LoopRejected(1)));
        assert_eq!(Graph::from_edges(0, &[]), Err(Error::SizeUnsupported(0)));
        assert_eq!(Graph::from_edges(65, &[]), Err(Error::SizeUnsupported(65)));
        assert!(Graph::from_edges(64, &[(0, 63)]).is_ok());
    }

    #[test]
    fn complement_examples() {
        let e3 = Graph::empty(3).unwrap();
        assert_eq!(e3.complement(), Graph::complete(3).unwrap());
        let c5c = Graph::cycle(5).unwrap().complement();
        assert_eq!(c5c.edge_count(), 5);
        assert!((0..5).all(|v| c5c.degree(v) == 2));
        // 0-2-4-1-3-0
        assert_eq!(
            c5c,
            Graph::from_edges(5, &[(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap()
        );
        let full64 = Graph::complete(64).unwrap();
        assert_eq!(full64.edge_count(), 64 * 63 / 2);
    }

    #[test]
    fn induced_subgraph_examples() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(
            k4.induced_subgraph(set(&[0, 1, 2])).unwrap(),
            Graph::complete(3).unwrap()
        );
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.induced_subgraph(set(&[2, 3])).unwrap(), Graph::complete(2).unwrap());
        assert_eq!(c5.induced_subgraph(set(&[1, 3])).unwrap(), Graph::empty(2).unwrap());
        assert_eq!(c5.induced_subgraph(VertexSet::EMPTY), Err(Error::EmptySelection));
        assert!(c5.induced_subgraph(set(&[1, 7])).is_err());
    }

    #[test]
    fn clique_and_independent_examples() {
        let c5 = Graph::cycle(5).unwrap();
        for v in 0..5 {
            assert!(c5.is_clique(VertexSet::singleton(v)));
            assert!(c5.is_independent(VertexSet::singleton(v)));
        }
        assert!(c5.is_clique(VertexSet::EMPTY) && c5.is_independent(VertexSet::EMPTY));
        assert!(c5.is_clique(set(&[0, 1])));
        assert!(!c5.is_clique(set(&[0, 1, 2])));
        assert!(c5.is_independent(set(&[1, 3])));
        assert!(!c5.is_independent(set(&[0, 2, 4])));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_labeled_graphs(3).unwrap().count(), 8);
        assert_eq!(enumerate_labeled_graphs(6).unwrap().count(), 32768);
        let mut by_edges = [0usize; 4];
        for g in enumerate_labeled_graphs(3).unwrap() {
            by_edges[g.edge_count()] += 1;
        }
        assert_eq!(by_edges, [1, 3, 3, 1]);
        assert!(matches!(
            enumerate_labeled_graphs(8).err(),
            Some(Error::ExhaustionTooLarge { .. })
        ));
    }

    #[test]
    fn enumeration_is_in_index_order_and_distinct() {
        for n in 1..=5 {
            let codes: Vec<u64> = enumerate_labeled_graphs(n)
                .unwrap()
                .map(|g| g.index().unwrap().code)
                .collect();
            assert_eq!(codes.len() as u64, 1 << pair_count(n));
            assert!(codes.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn pair_order_is_column_major() {
        let order: Vec<_> = pairs(4).collect();
        assert_eq!(order, vec![(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]);
        for (k, (i, j)) in pairs(10).enumerate() {
            assert_eq!(pair_index(i, j), k);
            assert_eq!(pair_index(j, i), k);
        }
    }

    #[test]
    fn exhaustive_small_graph_properties() {
        for n in 1..=5 {
            for g in enumerate_labeled_graphs(n).unwrap() {
                let c = g.complement();
                assert_eq!(c.complement(), g);
                let deg_sum: usize = (0..n).map(|v| g.degree(v) + c.degree(v)).sum();
                assert_eq!(deg_sum, n * (n - 1));
                if n <= 4 {
                    for bits in 0..1u64 << n {
                        let s = VertexSet(bits);
                        assert_eq!(g.is_clique(s), c.is_independent(s));
                    }
                }
            }
        }
    }

    #[test]
    fn adjacency_validation() {
        assert!(Graph::from_adjacency(vec![0b10, 0b01]).is_ok());
        assert!(Graph::from_adjacency(vec![0b10, 0b00]).is_err());
        assert!(Graph::from_adjacency(vec![0b01]).is_err());
        assert!(Graph::from_adjacency(vec![0b100, 0b0]).is_err());
    }
}
