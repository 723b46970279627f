//! Auditable records attached to every computed exact value.
//!
//! A `witness` certificate names one instance whose value falls short of
//! the target; anyone can decode it and recompute. An `exhaustive`
//! certificate records a complete scan of the instance space at one size,
//! which [`SearchCertificate::replay`] can repeat.

use serde::{Deserialize, Serialize};

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::VertexSet;
use crate::graph6::parse_graph6;
use crate::par::{scan, Exec, ScanOutcome};
use crate::rho::{WitnessFamily, WitnessPair};
use crate::search::{Instance, Mode, Parameters};
use crate::vdw::IntervalColoring;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateKind {
    Witness,
    Exhaustive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchCertificate {
    pub kind: CertificateKind,
    pub parameters: Parameters,
    /// Witness: the instance's value. Exhaustive: the minimum over the scan.
    pub value: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness_graph6: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness_coloring: Option<String>,
    /// Optimal vertex sets of the witness: `[A, B]` for a graph, one clique
    /// per color for an edge coloring.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness_parts: Option<Vec<VertexSet>>,
    /// Per-color contributions of the witness (scores or progression lengths).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness_profile: Option<Vec<usize>>,
    /// Position of the witness in the enumeration order.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness_index: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scanned_count: Option<u64>,
    pub predicate: String,
}

impl SearchCertificate {
    pub(crate) fn witness(params: Parameters, index: u64) -> Result<Self> {
        let instance = params.mode.instance(params.size, index)?;
        let eval = params.mode.evaluate(&instance);
        let (graph6, coloring) = instance.encode();
        Ok(SearchCertificate {
            kind: CertificateKind::Witness,
            predicate: params.predicate(),
            parameters: params,
            value: eval.value,
            witness_graph6: graph6,
            witness_coloring: coloring,
            witness_parts: eval.parts,
            witness_profile: eval.profile,
            witness_index: Some(index),
            scanned_count: None,
        })
    }

    pub(crate) fn exhaustive(params: Parameters, scanned: u64, min_value: u64) -> Self {
        SearchCertificate {
            kind: CertificateKind::Exhaustive,
            predicate: params.predicate(),
            parameters: params,
            value: min_value,
            witness_graph6: None,
            witness_coloring: None,
            witness_parts: None,
            witness_profile: None,
            witness_index: None,
            scanned_count: Some(scanned),
        }
    }

    /// Decodes the witness instance carried by this certificate.
    pub fn instance(&self) -> Result<Instance> {
        let p = &self.parameters;
        let missing = || Error::Certificate("witness instance missing".into());
        let instance = match p.mode {
            Mode::RPrime | Mode::Ramsey => {
                Instance::Graph(parse_graph6(self.witness_graph6.as_deref().ok_or_else(missing)?)?)
            }
            Mode::RPrimeM { m } | Mode::RamseyM { m } | Mode::Score { m, .. } => Instance::Edges(
                EdgeColoring::from_text(self.witness_coloring.as_deref().ok_or_else(missing)?, m)?,
            ),
            Mode::WPrime { m } | Mode::WClassical { m } => Instance::Interval(IntervalColoring::from_text(
                self.witness_coloring.as_deref().ok_or_else(missing)?,
                m,
            )?),
        };
        if instance.size() != p.size {
            return Err(Error::Certificate(format!(
                "witness has size {}, parameters say {}",
                instance.size(),
                p.size
            )));
        }
        Ok(instance)
    }

    /// Checks the certificate without rescanning: a witness is decoded and
    /// re-evaluated, an exhaustive record is checked against the size of its
    /// instance space.
    pub fn validate(&self) -> Result<()> {
        let p = &self.parameters;
        if self.predicate != p.predicate() {
            return Err(Error::Certificate("predicate does not match parameters".into()));
        }
        match self.kind {
            CertificateKind::Witness => {
                let instance = self.instance()?;
                let eval = p.mode.evaluate(&instance);
                if eval.value != self.value {
                    return Err(Error::Certificate(format!(
                        "witness evaluates to {}, certificate says {}",
                        eval.value, self.value
                    )));
                }
                if self.value >= p.target {
                    return Err(Error::Certificate("witness meets the target".into()));
                }
                if let Some(parts) = &self.witness_parts {
                    check_parts(p.mode, &instance, parts, self.value)?;
                }
                if let Some(index) = self.witness_index {
                    if instance.index() != Some(index) {
                        return Err(Error::Certificate("witness index does not match instance".into()));
                    }
                }
                Ok(())
            }
            CertificateKind::Exhaustive => {
                let expected = p.mode.instance_count(p.size)?;
                if self.scanned_count != Some(expected) {
                    return Err(Error::Certificate(format!(
                        "scanned {:?} instances, expected {expected}",
                        self.scanned_count
                    )));
                }
                if self.value < p.target {
                    return Err(Error::Certificate("exhaustive minimum below target".into()));
                }
                Ok(())
            }
        }
    }

    /// [`validate`](Self::validate), then for exhaustive records repeat the
    /// scan and compare its minimum.
    pub fn replay(&self, exec: Exec) -> Result<()> {
        self.validate()?;
        if self.kind == CertificateKind::Exhaustive {
            let p = &self.parameters;
            let count = p.mode.instance_count(p.size)?;
            match scan(count, p.target, exec, |i| p.mode.value_at(p.size, i)) {
                ScanOutcome::Pass { min_value, .. } if min_value == self.value => {}
                other => {
                    return Err(Error::Certificate(format!("replayed scan disagrees: {other:?}")));
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate serializes")
    }
}

fn check_parts(mode: Mode, instance: &Instance, parts: &[VertexSet], value: u64) -> Result<()> {
    match (mode, instance) {
        (Mode::RPrime | Mode::Ramsey, Instance::Graph(g)) => {
            let [a, b] = parts else {
                return Err(Error::Certificate("graph witness needs exactly two parts".into()));
            };
            let pair = WitnessPair::new(*a, *b);
            pair.validate(g)?;
            let achieved = match mode {
                Mode::RPrime => pair.value,
                _ => a.len().max(b.len()),
            };
            if achieved as u64 != value {
                return Err(Error::Certificate("parts do not realize the value".into()));
            }
        }
        (Mode::RPrimeM { .. } | Mode::RamseyM { .. }, Instance::Edges(c)) => {
            let family = WitnessFamily::new(parts.to_vec());
            family.validate(c)?;
            let achieved = match mode {
                Mode::RPrimeM { .. } => family.value,
                _ => parts.iter().map(|p| p.len()).max().unwrap_or(0),
            };
            if achieved as u64 != value {
                return Err(Error::Certificate("parts do not realize the value".into()));
            }
        }
        _ => return Err(Error::Certificate("unexpected witness parts".into())),
    }
    Ok(())
}
