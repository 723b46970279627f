//! Clique/independent-set pairs and their multicolor analogue.
//!
//! For a graph, the pair value is the largest `|A| + |B|` with `A` a clique
//! and `B` an independent set. Nothing couples `A` and `B` (they may overlap),
//! so the optimum is `ω(G) + α(G)`. For an `m`-edge-colored complete graph the
//! family value is the sum over colors of the largest monochromatic clique.

use serde::{Deserialize, Serialize};

use crate::clique::{clique_number, max_clique, max_independent};
use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest vertex count accepted by [`rho_prime_bruteforce`].
pub const ORACLE_MAX_VERTICES: usize = 16;

/// A clique `a` and an independent set `b` of one graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessPair {
    pub a: VertexSet,
    pub b: VertexSet,
    pub value: usize,
}

impl WitnessPair {
    pub fn new(a: VertexSet, b: VertexSet) -> Self {
        WitnessPair {
            a,
            b,
            value: a.len() + b.len(),
        }
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        let all = g.vertices();
        if !self.a.is_subset(all) || !self.b.is_subset(all) {
            return Err(Error::Certificate("witness vertex outside the graph".into()));
        }
        if !g.is_clique(self.a) {
            return Err(Error::Certificate(format!("{:?} is not a clique", self.a)));
        }
        if !g.is_independent(self.b) {
            return Err(Error::Certificate(format!("{:?} is not independent", self.b)));
        }
        if self.value != self.a.len() + self.b.len() {
            return Err(Error::Certificate("pair value does not match set sizes".into()));
        }
        Ok(())
    }
}

/// One monochromatic clique per color; `parts[i]` uses color `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessFamily {
    pub parts: Vec<VertexSet>,
    pub value: usize,
}

impl WitnessFamily {
    pub fn new(parts: Vec<VertexSet>) -> Self {
        let value = parts.iter().map(|p| p.len()).sum();
        WitnessFamily { parts, value }
    }

    pub fn validate(&self, c: &EdgeColoring) -> Result<()> {
        if self.parts.len() != c.m() {
            return Err(Error::Certificate(format!(
                "{} parts for {} colors",
                self.parts.len(),
                c.m()
            )));
        }
        let all = VertexSet::full(c.n());
        for (color, part) in self.parts.iter().enumerate() {
            if !part.is_subset(all) {
                return Err(Error::Certificate("witness vertex outside the coloring".into()));
            }
            for u in part.iter() {
                for v in part.iter().filter(|&v| v > u) {
                    if c.color(u, v) != color {
                        return Err(Error::Certificate(format!(
                            "pair {{{u}, {v}}} in part {color} has color {}",
                            c.color(u, v)
                        )));
                    }
                }
            }
        }
        if self.value != self.parts.iter().map(|p| p.len()).sum::<usize>() {
            return Err(Error::Certificate("family value does not match part sizes".into()));
        }
        Ok(())
    }
}

/// Optimal pair: the lexicographically least maximum clique and maximum
/// independent set.
pub fn rho_prime(g: &Graph) -> WitnessPair {
    let (_, a) = max_clique(g);
    let (_, b) = max_independent(g);
    WitnessPair::new(a, b)
}

/// Value of [`rho_prime`] without constructing a witness.
pub fn rho_prime_value(g: &Graph) -> usize {
    clique_number(g) + clique_number(&g.complement())
}

/// Pair value by classifying all `2^n` subsets directly.
pub fn rho_prime_bruteforce(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n > ORACLE_MAX_VERTICES {
        return Err(Error::OracleTooLarge(n));
    }
    let adj = g.adjacency();
    let size = 1usize << n;
    // clique[s] / indep[s] for every subset s, built from s minus its lowest vertex
    let mut clique = vec![false; size];
    let mut indep = vec![false; size];
    clique[0] = true;
    indep[0] = true;
    let (mut best_a, mut best_b) = (0, 0);
    for s in 1..size {
        let low = s.trailing_zeros() as usize;
        let rest = s & (s - 1);
        clique[s] = clique[rest] && (adj[low] as usize & rest) == rest;
        indep[s] = indep[rest] && (adj[low] as usize & rest) == 0;
        let k = s.count_ones() as usize;
        if clique[s] {
            best_a = best_a.max(k);
        }
        if indep[s] {
            best_b = best_b.max(k);
        }
    }
    Ok(best_a + best_b)
}

/// Optimal family: the lexicographically least maximum clique of every
/// color class.
pub fn rho_prime_m(c: &EdgeColoring) -> WitnessFamily {
    WitnessFamily::new((0..c.m()).map(|i| max_clique(&c.class_graph(i)).1).collect())
}

/// Per-color clique numbers of an edge coloring.
pub fn color_clique_numbers(c: &EdgeColoring) -> Vec<usize> {
    (0..c.m()).map(|i| clique_number(&c.class_graph(i))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::enumerate_edge_colorings;
    use crate::graph::enumerate_labeled_graphs;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn c5_and_small_graphs() {
        let c5 = Graph::cycle(5).unwrap();
        let w = rho_prime(&c5);
        assert_eq!(w.value, 4);
        w.validate(&c5).unwrap();
        assert_eq!(rho_prime_bruteforce(&c5).unwrap(), 4);
        assert_eq!(rho_prime_bruteforce(&Graph::complete(3).unwrap()).unwrap(), 4);

        let single = Graph::empty(1).unwrap();
        let w = rho_prime(&single);
        assert_eq!(w, WitnessPair::new(set(&[0]), set(&[0])));
        assert_eq!(w.value, 2);
    }

    #[test]
    fn three_vertex_graphs_by_edge_count() {
        let graphs = [
            Graph::empty(3).unwrap(),
            Graph::from_edges(3, &[(0, 1)]).unwrap(),
            Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap(),
            Graph::complete(3).unwrap(),
        ];
        let sizes: Vec<_> = graphs.iter().map(|g| rho_prime(g).a.len()).collect();
        assert_eq!(sizes, vec![1, 2, 2, 3]);
        assert!(graphs.iter().all(|g| rho_prime(g).value == 4));
    }

    #[test]
    fn exhaustive_identities() {
        for n in 1..=5 {
            for g in enumerate_labeled_graphs(n).unwrap() {
                let w = rho_prime(&g);
                w.validate(&g).unwrap();
                assert_eq!(w.value, rho_prime_bruteforce(&g).unwrap());
                assert_eq!(w.value, rho_prime(&g.complement()).value);
                assert_eq!(w.value, rho_prime_value(&g));
            }
        }
    }

    #[test]
    fn oracle_size_guard() {
        assert_eq!(
            rho_prime_bruteforce(&Graph::empty(17).unwrap()),
            Err(Error::OracleTooLarge(17))
        );
        assert_eq!(rho_prime_bruteforce(&Graph::empty(16).unwrap()).unwrap(), 17);
    }

    #[test]
    fn family_examples() {
        for m in 2..=4 {
            let w = rho_prime_m(&EdgeColoring::monochromatic(1, m, 0).unwrap());
            assert_eq!(w.value, m);
            assert!(w.parts.iter().all(|&p| p == set(&[0])));
            for c in enumerate_edge_colorings(2, m).unwrap() {
                assert_eq!(rho_prime_m(&c).value, m + 1);
            }
        }
        let tri = EdgeColoring::new(3, 2, vec![0, 0, 1]).unwrap();
        let w = rho_prime_m(&tri);
        assert_eq!(w.value, 4);
        w.validate(&tri).unwrap();
    }

    #[test]
    fn family_validation_rejects_bad_parts() {
        let tri = EdgeColoring::new(3, 2, vec![0, 0, 1]).unwrap();
        // pair {1,2} has color 1
        assert!(WitnessFamily::new(vec![set(&[1, 2]), set(&[0])])
            .validate(&tri)
            .is_err());
        assert!(WitnessFamily::new(vec![set(&[0])]).validate(&tri).is_err());
        let g = Graph::cycle(5).unwrap();
        assert!(WitnessPair::new(set(&[0, 2]), set(&[0])).validate(&g).is_err());
        assert!(WitnessPair::new(set(&[0]), set(&[0, 1])).validate(&g).is_err());
    }

    #[test]
    fn two_colorings_agree_with_graph_pairs() {
        for g in enumerate_labeled_graphs(5).unwrap() {
            let c = EdgeColoring::from_graph(&g);
            assert_eq!(rho_prime_m(&c).value, rho_prime(&g).value);
        }
    }
}
