//! Exact maximum clique by branch and bound over candidate bitsets.
//!
//! Each node bounds the reachable clique size by a greedy coloring of the
//! candidates and branches on the candidate of largest candidate-degree
//! (lowest index on ties): first with it, then without it.

use crate::graph::{Graph, VertexSet};

/// Upper bound on the clique number of `cand`: the number of color classes
/// of a greedy sequential coloring.
fn coloring_bound(adj: &[u64], cand: u64) -> usize {
    let mut uncolored = cand;
    let mut colors = 0;
    while uncolored != 0 {
        colors += 1;
        let mut avail = uncolored;
        while avail != 0 {
            let v = avail.trailing_zeros() as usize;
            uncolored &= !(1 << v);
            avail &= !(1 << v) & !adj[v];
        }
    }
    colors
}

fn pivot(adj: &[u64], cand: u64) -> usize {
    let mut best = (0, usize::MAX);
    let mut rest = cand;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let d = (adj[v] & cand).count_ones() as usize;
        if best.1 == usize::MAX || d > best.0 {
            best = (d, v);
        }
    }
    best.1
}

struct Search<'a> {
    adj: &'a [u64],
    best: usize,
    /// Stop as soon as `best` reaches this size.
    stop_at: usize,
}

impl Search<'_> {
    fn expand(&mut self, size: usize, cand: u64) {
        if cand == 0 {
            self.best = self.best.max(size);
            return;
        }
        if size + coloring_bound(self.adj, cand) <= self.best {
            return;
        }
        let v = pivot(self.adj, cand);
        self.expand(size + 1, cand & self.adj[v]);
        if self.best >= self.stop_at {
            return;
        }
        self.expand(size, cand & !(1 << v));
    }
}

/// Size of the largest clique inside `cand`.
pub fn clique_number_within(g: &Graph, cand: VertexSet) -> usize {
    let mut s = Search {
        adj: g.adjacency(),
        best: 0,
        stop_at: usize::MAX,
    };
    s.expand(0, cand.bits());
    s.best
}

pub fn clique_number(g: &Graph) -> usize {
    clique_number_within(g, g.vertices())
}

pub fn independence_number(g: &Graph) -> usize {
    clique_number(&g.complement())
}

/// Whether `cand` contains a clique of at least `k` vertices.
pub fn has_clique_within(g: &Graph, cand: VertexSet, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    let mut s = Search {
        adj: g.adjacency(),
        best: k - 1,
        stop_at: k,
    };
    s.expand(0, cand.bits());
    s.best >= k
}

/// Clique number and the lexicographically least maximum clique (comparing
/// vertex lists sorted ascending).
pub fn max_clique(g: &Graph) -> (usize, VertexSet) {
    let omega = clique_number(g);
    let mut chosen = VertexSet::EMPTY;
    let mut cand = g.vertices();
    for v in 0..g.n() {
        if chosen.len() == omega {
            break;
        }
        if !cand.contains(v) {
            continue;
        }
        let above = VertexSet(if v >= 63 { 0 } else { u64::MAX << (v + 1) });
        let next = cand.intersection(g.neighbors(v)).intersection(above);
        if has_clique_within(g, next, omega - chosen.len() - 1) {
            chosen.insert(v);
            cand = next;
        } else {
            cand.remove(v);
        }
    }
    debug_assert_eq!(chosen.len(), omega);
    (omega, chosen)
}

/// Independence number and the lexicographically least maximum independent set.
pub fn max_independent(g: &Graph) -> (usize, VertexSet) {
    max_clique(&g.complement())
}
