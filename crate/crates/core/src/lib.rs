//! Exact small Ramsey-type numbers with auditable certificates.
//!
//! The central quantity is the pair number of a graph: the largest
//! `|A| + |B|` over a clique `A` and an independent set `B` (overlap
//! allowed), which equals `ω(G) + α(G)`. Its threshold `R'(n)` is the least
//! `N` such that every graph on `N` vertices has pair number at least `n`;
//! `R(n) <= R'(2n - 1)` and `R'(n) <= 2^(n-2)`, the latter realized
//! constructively by [`greedy_pair_proof`].
//!
//! The crate also covers the `m`-color analogues on edge-colored complete
//! graphs, cycle/path scores with top-`j` aggregation, and the van der
//! Waerden analogue on colored intervals. Every exact value is produced by
//! exhaustive search and carries a [`SearchCertificate`].

pub mod bounds;
pub mod certificate;
pub mod claims;
pub mod clique;
pub mod coloring;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod greedy;
pub mod par;
pub mod rho;
pub mod score;
pub mod search;
pub mod vdw;

pub use bounds::{bound_formulas, BoundFormulas};
pub use certificate::{CertificateKind, SearchCertificate};
pub use clique::{max_clique, max_independent};
pub use coloring::{enumerate_edge_colorings, EdgeColoring};
pub use error::{Error, Result};
pub use graph::{enumerate_labeled_graphs, Graph, GraphIndex, VertexSet};
pub use graph6::{parse_graph6, write_graph6};
pub use greedy::{greedy_family_m, greedy_pair_proof, greedy_pair_remark, GreedyTrace, VertexRule};
pub use par::Exec;
pub use rho::{rho_prime, rho_prime_bruteforce, rho_prime_m, WitnessFamily, WitnessPair};
pub use score::{rho_score, score_color_class, search_threshold_score, ScoreKind, ScoreProfile};
pub use search::{
    check_universal, search_threshold, Mode, Parameters, SearchOptions, Threshold, ThresholdKind, ThresholdStatus,
    Universal,
};
pub use vdw::{longest_mono_ap, rho_w, w_classical_check, w_prime_search, IntervalColoring};

/// Version string recorded in cached results.
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");
