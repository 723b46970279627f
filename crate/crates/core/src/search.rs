//! Exhaustive universal checks and threshold search.
//!
//! A [`Mode`] fixes what is enumerated (labeled graphs, edge colorings of a
//! complete graph, colorings of an interval) and which integer is computed
//! for each instance. A universal check asks whether every instance of one
//! size reaches a target; a threshold search probes sizes `1, 2, 3, ...`
//! upward and stops at the first size where the check holds. Every
//! predicate here is monotone in the size (delete a vertex or the last
//! integer), so the first passing size is the threshold.

use serde::{Deserialize, Serialize};

use crate::bounds;
use crate::certificate::SearchCertificate;
use crate::clique::{clique_number, max_clique, max_independent};
use crate::coloring::{edge_coloring_count, EdgeColoring, MAX_COLORING_ENUMERATION};
use crate::error::{Error, Result};
use crate::graph::{labeled_graph_count, Graph, GraphIndex, VertexSet, MAX_VERTICES};
use crate::graph6::write_graph6;
use crate::par::{scan, Exec, ScanOutcome};
use crate::rho::rho_prime_m;
use crate::score::{check_j, score_profile, ScoreKind};
use crate::vdw::{interval_coloring_count, rho_w, IntervalColoring};

/// Default cap on instances visited by one universal check.
pub const DEFAULT_BUDGET: u64 = 1 << 26;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "query")]
pub enum Mode {
    /// Graphs; value `ω + α`.
    #[serde(rename = "rprime")]
    RPrime,
    /// Graphs; value `max(ω, α)`.
    #[serde(rename = "ramsey")]
    Ramsey,
    /// `m`-colorings of `K_N`; value is the sum of per-color clique numbers.
    #[serde(rename = "rprime_m")]
    RPrimeM { m: usize },
    /// `m`-colorings of `K_N`; value is the largest per-color clique number.
    #[serde(rename = "ramsey_m")]
    RamseyM { m: usize },
    /// `m`-colorings of `K_N`; value is the top-`j` score sum.
    #[serde(rename = "score")]
    Score { score: ScoreKind, m: usize, j: usize },
    /// `m`-colorings of `1..=N`; value is the sum of per-color longest progressions.
    #[serde(rename = "wprime")]
    WPrime { m: usize },
    /// `m`-colorings of `1..=N`; value is the longest monochromatic progression.
    #[serde(rename = "wclassical")]
    WClassical { m: usize },
}

impl Mode {
    /// Size of the instance space at `size` vertices or integers.
    pub fn instance_count(&self, size: usize) -> Result<u64> {
        match *self {
            Mode::RPrime | Mode::Ramsey => labeled_graph_count(size),
            Mode::RPrimeM { m } | Mode::RamseyM { m } => edge_coloring_count(size, m),
            Mode::Score { m, j, .. } => {
                check_j(j, m)?;
                edge_coloring_count(size, m)
            }
            Mode::WPrime { m } | Mode::WClassical { m } => {
                IntervalColoring::monochromatic(size, m)?;
                interval_coloring_count(size, m)
                    .filter(|&c| c <= MAX_COLORING_ENUMERATION)
                    .ok_or_else(|| Error::ExhaustionTooLarge {
                        what: format!("{m}^{size} interval colorings"),
                    })
            }
        }
    }

    pub fn instance(&self, size: usize, index: u64) -> Result<Instance> {
        Ok(match *self {
            Mode::RPrime | Mode::Ramsey => Instance::Graph(Graph::from_index(GraphIndex { n: size, code: index })?),
            Mode::RPrimeM { m } | Mode::RamseyM { m } | Mode::Score { m, .. } => {
                Instance::Edges(EdgeColoring::from_index(size, m, index)?)
            }
            Mode::WPrime { m } | Mode::WClassical { m } => {
                Instance::Interval(IntervalColoring::from_index(size, m, index)?)
            }
        })
    }

    /// The value of the `index`-th instance, without witnesses.
    pub fn value_at(&self, size: usize, index: u64) -> u64 {
        let instance = self.instance(size, index).expect("index within counted range");
        self.value(&instance)
    }

    fn value(&self, instance: &Instance) -> u64 {
        let v = match (*self, instance) {
            (Mode::RPrime, Instance::Graph(g)) => clique_number(g) + clique_number(&g.complement()),
            (Mode::Ramsey, Instance::Graph(g)) => clique_number(g).max(clique_number(&g.complement())),
            (Mode::RPrimeM { .. }, Instance::Edges(c)) => (0..c.m()).map(|i| clique_number(&c.class_graph(i))).sum(),
            (Mode::RamseyM { .. }, Instance::Edges(c)) => {
                (0..c.m()).map(|i| clique_number(&c.class_graph(i))).max().unwrap_or(0)
            }
            (Mode::Score { score, j, .. }, Instance::Edges(c)) => score_profile(c, score).aggregate(j),
            (Mode::WPrime { .. }, Instance::Interval(c)) => rho_w(c).0,
            (Mode::WClassical { .. }, Instance::Interval(c)) => rho_w(c).1.into_iter().max().unwrap_or(0),
            _ => unreachable!("instance kind does not match mode"),
        };
        v as u64
    }

    /// Value plus the structures realizing it.
    pub fn evaluate(&self, instance: &Instance) -> Evaluation {
        let value = self.value(instance);
        let (parts, profile) = match (*self, instance) {
            (Mode::RPrime | Mode::Ramsey, Instance::Graph(g)) => {
                (Some(vec![max_clique(g).1, max_independent(g).1]), None)
            }
            (Mode::RPrimeM { .. } | Mode::RamseyM { .. }, Instance::Edges(c)) => {
                let family = rho_prime_m(c);
                let sizes = family.parts.iter().map(|p| p.len()).collect();
                (Some(family.parts), Some(sizes))
            }
            (Mode::Score { score, .. }, Instance::Edges(c)) => (None, Some(score_profile(c, score).scores)),
            (Mode::WPrime { .. } | Mode::WClassical { .. }, Instance::Interval(c)) => (None, Some(rho_w(c).1)),
            _ => unreachable!("instance kind does not match mode"),
        };
        Evaluation { value, parts, profile }
    }
}

/// One enumerated object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Graph(Graph),
    Edges(EdgeColoring),
    Interval(IntervalColoring),
}

impl Instance {
    pub fn size(&self) -> usize {
        match self {
            Instance::Graph(g) => g.n(),
            Instance::Edges(c) => c.n(),
            Instance::Interval(c) => c.len(),
        }
    }

    pub fn index(&self) -> Option<u64> {
        match self {
            Instance::Graph(g) => g.index().map(|i| i.code),
            Instance::Edges(c) => c.index(),
            Instance::Interval(c) => c.index(),
        }
    }

    /// `(graph6, coloring text)`; exactly one is set.
    pub(crate) fn encode(&self) -> (Option<String>, Option<String>) {
        match self {
            Instance::Graph(g) => (Some(write_graph6(g)), None),
            Instance::Edges(c) => (None, Some(c.to_text())),
            Instance::Interval(c) => (None, Some(c.to_text())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Evaluation {
    pub value: u64,
    pub parts: Option<Vec<VertexSet>>,
    pub profile: Option<Vec<usize>>,
}

/// What to check: every instance of `size` reaches `target`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Parameters {
    #[serde(flatten)]
    pub mode: Mode,
    pub target: u64,
    pub size: usize,
}

impl Parameters {
    pub fn predicate(&self) -> String {
        let t = self.target;
        match self.mode {
            Mode::RPrime => format!("omega + alpha >= {t}"),
            Mode::Ramsey => format!("max(omega, alpha) >= {t}"),
            Mode::RPrimeM { m } => format!("sum of {m} color clique numbers >= {t}"),
            Mode::RamseyM { m } => format!("max of {m} color clique numbers >= {t}"),
            Mode::Score { score, m, j } => {
                let name = serde_json::to_value(score).expect("score kind serializes");
                format!("sum of top {j} of {m} {} scores >= {t}", name.as_str().unwrap_or("?"))
            }
            Mode::WPrime { m } => format!("sum of {m} longest monochromatic progressions >= {t}"),
            Mode::WClassical { m } => format!("longest monochromatic progression ({m} colors) >= {t}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Largest instance space one universal check may scan.
    pub budget: u64,
    pub exec: Exec,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: DEFAULT_BUDGET,
            exec: Exec::default(),
        }
    }
}

impl SearchOptions {
    pub fn with_exec(exec: Exec) -> Self {
        SearchOptions {
            exec,
            ..Default::default()
        }
    }
}

/// Outcome of a universal check; both variants carry a certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Universal {
    /// Exhaustive certificate: every instance reached the target.
    Holds(SearchCertificate),
    /// Witness certificate for the least failing instance in enumeration order.
    Counterexample(SearchCertificate),
}

impl Universal {
    pub fn holds(&self) -> bool {
        matches!(self, Universal::Holds(_))
    }

    pub fn certificate(&self) -> &SearchCertificate {
        match self {
            Universal::Holds(c) | Universal::Counterexample(c) => c,
        }
    }
}

/// Scans every instance of `params.size` and reports whether all reach
/// `params.target`.
pub fn check_universal(params: &Parameters, opts: &SearchOptions) -> Result<Universal> {
    let count = params.mode.instance_count(params.size)?;
    if count > opts.budget {
        return Err(Error::ExhaustionTooLarge {
            what: format!("{count} instances exceed the budget of {}", opts.budget),
        });
    }
    let mode = params.mode;
    let size = params.size;
    Ok(
        match scan(count, params.target, opts.exec, |i| mode.value_at(size, i)) {
            ScanOutcome::Pass { scanned, min_value } => {
                Universal::Holds(SearchCertificate::exhaustive(*params, scanned, min_value))
            }
            ScanOutcome::Fail { index, .. } => Universal::Counterexample(SearchCertificate::witness(*params, index)?),
        },
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ThresholdStatus {
    Exact,
    /// The search was blocked by the budget; `value` is a closed-form upper bound.
    BoundOnly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Threshold {
    #[serde(flatten)]
    pub mode: Mode,
    pub target: u64,
    pub status: ThresholdStatus,
    pub value: u64,
    /// Equal to `value` when exact.
    pub lower_bound: u64,
    /// Counterexample at `value - 1` (absent when the threshold is 1).
    pub lower: Option<SearchCertificate>,
    /// Exhaustive scan at `value`.
    pub upper: Option<SearchCertificate>,
}

impl Threshold {
    pub fn is_exact(&self) -> bool {
        self.status == ThresholdStatus::Exact
    }

    /// Re-validates both certificates and checks they bracket `value`.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::Certificate(msg.into()));
        if let Some(lower) = &self.lower {
            lower.validate()?;
            if lower.parameters.size as u64 + 1 != self.lower_bound {
                return bad("lower witness is not one below the threshold");
            }
        } else if self.lower_bound != 1 {
            return bad("missing lower witness");
        }
        match (&self.upper, self.status) {
            (Some(upper), ThresholdStatus::Exact) => {
                upper.validate()?;
                if upper.parameters.size as u64 != self.value || self.lower_bound != self.value {
                    return bad("exhaustive certificate is not at the threshold");
                }
            }
            (None, ThresholdStatus::BoundOnly) => {}
            _ => return bad("certificate/status mismatch"),
        }
        Ok(())
    }
}

/// Least size at which every instance reaches `target`. `upper` is reported
/// in the error when the budget runs out first.
pub fn find_threshold(mode: Mode, target: u64, opts: &SearchOptions, upper: Option<u64>) -> Result<Threshold> {
    let mut lower = None;
    for size in 1..=MAX_VERTICES {
        let params = Parameters { mode, target, size };
        match check_universal(&params, opts) {
            Ok(Universal::Holds(cert)) => {
                return Ok(Threshold {
                    mode,
                    target,
                    status: ThresholdStatus::Exact,
                    value: size as u64,
                    lower_bound: size as u64,
                    lower,
                    upper: Some(cert),
                });
            }
            Ok(Universal::Counterexample(cert)) => lower = Some(cert),
            Err(Error::ExhaustionTooLarge { .. }) => {
                return Err(Error::Undecided {
                    lower: size as u64,
                    upper,
                });
            }
            Err(e) => return Err(e),
        }
    }
    Err(Error::Undecided {
        lower: MAX_VERTICES as u64 + 1,
        upper,
    })
}

/// Which Ramsey-type number [`search_threshold`] computes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ThresholdKind {
    /// Least `N` with `ω + α >= n` on every graph of `N` vertices.
    RPrime,
    /// The Ramsey number `R(n)`.
    Ramsey,
    /// Multicolor analogue of `RPrime` with `m` colors.
    RPrimeM,
    /// The multicolor Ramsey number `R_m(n)`. The closed-form bound comes
    /// from `R_m(n) <= R'_m(m(n-1)+1)`: color clique numbers summing past
    /// `m(n-1)` force one of them to reach `n`. The two-color `R'` is not
    /// enough here.
    RamseyM,
}

/// Exact threshold with certificates. `m` is ignored for the graph kinds.
///
/// When the budget blocks an exact `R_m(n)` search, the closed-form bound is
/// returned with [`ThresholdStatus::BoundOnly`]; the other kinds report
/// [`Error::Undecided`].
pub fn search_threshold(kind: ThresholdKind, n: u64, m: usize, opts: &SearchOptions) -> Result<Threshold> {
    if n == 0 {
        return Err(Error::InvalidParameter("target must be at least 1".into()));
    }
    let (mode, upper) = match kind {
        ThresholdKind::RPrime => (Mode::RPrime, bounds::pair_bound(n).ok()),
        ThresholdKind::Ramsey => (Mode::Ramsey, bounds::ramsey_bound(n).ok()),
        ThresholdKind::RPrimeM => (Mode::RPrimeM { m }, bounds::family_bound(n, m as u64).ok()),
        ThresholdKind::RamseyM => (Mode::RamseyM { m }, bounds::multicolor_ramsey_bound(n, m as u64).ok()),
    };
    match find_threshold(mode, n, opts, upper) {
        Err(Error::Undecided {
            lower: lower_bound,
            upper: Some(bound),
        }) if kind == ThresholdKind::RamseyM => {
            // the last failing size is one below the first blocked one
            let lower = match lower_bound {
                1 => None,
                s => match check_universal(
                    &Parameters {
                        mode,
                        target: n,
                        size: s as usize - 1,
                    },
                    opts,
                )? {
                    Universal::Counterexample(c) => Some(c),
                    Universal::Holds(_) => unreachable!("search passed this size already"),
                },
            };
            Ok(Threshold {
                mode,
                target: n,
                status: ThresholdStatus::BoundOnly,
                value: bound,
                lower_bound,
                lower,
                upper: None,
            })
        }
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::CertificateKind;

    fn is_labeled_c5(g: &Graph) -> bool {
        g.n() == 5 && g.edge_count() == 5 && (0..5).all(|v| g.degree(v) == 2) && {
            // connected 2-regular
            let mut seen = VertexSet::singleton(0);
            for _ in 0..5 {
                for v in seen.iter() {
                    seen = seen.union(g.neighbors(v));
                }
            }
            seen.len() == 5
        }
    }

    fn graph_of(cert: &SearchCertificate) -> Graph {
        match cert.instance().unwrap() {
            Instance::Graph(g) => g,
            other => panic!("expected graph, got {other:?}"),
        }
    }

    #[test]
    fn universal_examples() {
        let opts = SearchOptions::default();
        let u = check_universal(
            &Parameters {
                mode: Mode::RPrime,
                target: 4,
                size: 3,
            },
            &opts,
        )
        .unwrap();
        assert!(u.holds());
        assert_eq!(u.certificate().scanned_count, Some(8));

        let u = check_universal(
            &Parameters {
                mode: Mode::RPrime,
                target: 5,
                size: 5,
            },
            &opts,
        )
        .unwrap();
        assert!(!u.holds());
        assert!(is_labeled_c5(&graph_of(u.certificate())));

        let u = check_universal(
            &Parameters {
                mode: Mode::Ramsey,
                target: 3,
                size: 5,
            },
            &opts,
        )
        .unwrap();
        assert!(is_labeled_c5(&graph_of(u.certificate())));
        let u = check_universal(
            &Parameters {
                mode: Mode::Ramsey,
                target: 3,
                size: 6,
            },
            &opts,
        )
        .unwrap();
        assert!(u.holds());
        assert_eq!(u.certificate().scanned_count, Some(32768));
        u.certificate().replay(Exec::default()).unwrap();
    }

    #[test]
    fn budget_and_guards() {
        let tight = SearchOptions {
            budget: 100,
            exec: Exec::default(),
        };
        assert!(matches!(
            check_universal(
                &Parameters {
                    mode: Mode::RPrime,
                    target: 3,
                    size: 5
                },
                &tight
            ),
            Err(Error::ExhaustionTooLarge { .. })
        ));
        assert!(matches!(
            check_universal(
                &Parameters {
                    mode: Mode::RPrime,
                    target: 3,
                    size: 8
                },
                &SearchOptions::default()
            ),
            Err(Error::ExhaustionTooLarge { .. })
        ));
        assert!(matches!(
            search_threshold(ThresholdKind::RPrime, 6, 2, &SearchOptions::default()),
            Err(Error::Undecided {
                lower: 8,
                upper: Some(16)
            })
        ));
    }

    #[test]
    fn threshold_examples() {
        let opts = SearchOptions::default();
        let value = |kind, n, m| search_threshold(kind, n, m, &opts).unwrap().value;
        assert_eq!(value(ThresholdKind::RPrime, 2, 2), 1);
        assert_eq!(value(ThresholdKind::RPrime, 3, 2), 2);
        assert_eq!(value(ThresholdKind::RPrime, 4, 2), 3);
        assert_eq!(value(ThresholdKind::RPrime, 5, 2), 6);
        let r3 = search_threshold(ThresholdKind::Ramsey, 3, 2, &opts).unwrap();
        assert_eq!(r3.value, 6);
        assert!(is_labeled_c5(&graph_of(r3.lower.as_ref().unwrap())));
        r3.validate().unwrap();
        for m in 2..=3u64 {
            for (n, expected) in [(m, 1), (m + 1, 2), (m + 2, 3)] {
                let t = search_threshold(ThresholdKind::RPrimeM, n, m as usize, &opts).unwrap();
                assert_eq!(t.value, expected, "m = {m}, n = {n}");
                t.validate().unwrap();
            }
        }
    }

    #[test]
    fn multicolor_ramsey_falls_back_to_bound() {
        let opts = SearchOptions::default();
        let t = search_threshold(ThresholdKind::RamseyM, 2, 3, &opts).unwrap();
        assert_eq!((t.value, t.status), (2, ThresholdStatus::Exact));
        let t = search_threshold(ThresholdKind::RamseyM, 3, 3, &opts).unwrap();
        assert_eq!(t.status, ThresholdStatus::BoundOnly);
        assert_eq!(t.value, bounds::multicolor_ramsey_bound(3, 3).unwrap());
        assert!(t.lower_bound >= 5);
        t.validate().unwrap();
        // two colors agree with the graph search
        assert_eq!(search_threshold(ThresholdKind::RamseyM, 3, 2, &opts).unwrap().value, 6);
    }

    #[test]
    fn certificates_reject_tampering() {
        let opts = SearchOptions::default();
        let t = search_threshold(ThresholdKind::RPrime, 5, 2, &opts).unwrap();
        let mut lower = t.lower.clone().unwrap();
        assert_eq!(lower.kind, CertificateKind::Witness);
        lower.validate().unwrap();
        lower.value = 3;
        assert!(lower.validate().is_err());
        let mut lower = t.lower.clone().unwrap();
        lower.witness_graph6 = Some("D~{".into());
        assert!(lower.validate().is_err());
        let mut upper = t.upper.clone().unwrap();
        upper.scanned_count = Some(100);
        assert!(upper.validate().is_err());
        let mut upper = t.upper.clone().unwrap();
        upper.value = 7;
        assert!(upper.replay(Exec::default()).is_err());
    }

    #[test]
    fn certificates_round_trip_json() {
        let opts = SearchOptions::default();
        let t = search_threshold(ThresholdKind::RPrimeM, 5, 3, &opts).unwrap();
        let json = serde_json::to_string(&t).unwrap();
        let back: Threshold = serde_json::from_str(&json).unwrap();
        assert_eq!(back, t);
        back.validate().unwrap();
        let cert: serde_json::Value = serde_json::from_str(&t.upper.unwrap().to_json()).unwrap();
        assert_eq!(cert["kind"], "exhaustive");
        assert_eq!(cert["parameters"]["query"], "rprime_m");
        assert_eq!(cert["scanned_count"], 27);
    }

    #[test]
    fn results_independent_of_threads() {
        let run = |threads| {
            let opts = SearchOptions::with_exec(Exec::with_threads(threads));
            serde_json::to_string(&search_threshold(ThresholdKind::RPrime, 5, 2, &opts).unwrap()).unwrap()
        };
        let one = run(1);
        assert_eq!(one, run(3));
        assert_eq!(one, run(8));
    }
}
