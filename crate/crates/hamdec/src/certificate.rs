//! On-disk certificate format: JSON records carrying the decided instance
//! (graph6 plus a content hash), the verdict kind, and whichever evidence
//! applies — explicit cycles, an edge coloring, or refutation detail.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::decomp::{
    check_hd, check_p1f, kotzig_obstruction, verify_counting_detail, Certificate, CountingDetail,
    ExplicitCycle, HdCertificate, P1fCertificate, Refutation, Verdict,
};
use crate::error::{Error, Result};
use crate::graph::{Graph, Multigraph};
use crate::graph6::{encode_graph6, parse_graph6};
use crate::hamilton::enumerate_hamilton_cycles;
use crate::SearchBudget;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleRecord {
    pub vertices: Vec<usize>,
    pub copies: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RefutationDetail {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub nodes: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub modulus: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub edge_deltas: Option<Vec<Vec<u8>>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub edge_target: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub cycle_total: Option<u64>,
}

/// One decided instance with its evidence, as persisted by the CLI.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateFile {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub graph_name: Option<String>,
    pub graph6: String,
    /// SHA-256 of the graph6 string; detects stale certificates.
    pub graph_sha256: String,
    pub m: usize,
    /// "HD", "P1F", or "REFUTATION".
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counts: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub cycles: Option<Vec<CycleRecord>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub coloring: Option<Vec<u8>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub refutation_detail: Option<RefutationDetail>,
}

pub fn graph_hash(graph6: &str) -> String {
    let digest = Sha256::digest(graph6.as_bytes());
    digest.iter().map(|b| format!("{:02x}", b)).collect()
}

impl CertificateFile {
    pub fn from_verdict(
        graph_name: Option<&str>,
        base: &Graph,
        m: usize,
        verdict: &Verdict,
    ) -> Self {
        let graph6 = encode_graph6(base);
        let graph_sha256 = graph_hash(&graph6);
        let mut file = CertificateFile {
            graph_name: graph_name.map(str::to_string),
            graph6,
            graph_sha256,
            m,
            kind: String::new(),
            counts: None,
            cycles: None,
            coloring: None,
            refutation_detail: None,
        };
        match verdict {
            Verdict::Decomposable(Certificate::Hd(cert)) => {
                file.kind = "HD".into();
                file.counts = cert.counts.clone();
                file.cycles = Some(
                    cert.cycles
                        .iter()
                        .map(|c| CycleRecord {
                            vertices: c.vertices.clone(),
                            copies: c.copies.clone(),
                        })
                        .collect(),
                );
            }
            Verdict::Decomposable(Certificate::P1f(cert)) => {
                file.kind = "P1F".into();
                file.coloring = Some(cert.coloring.clone());
            }
            Verdict::NotDecomposable(refutation) => {
                file.kind = "REFUTATION".into();
                file.refutation_detail = Some(match refutation {
                    Refutation::NoHamiltonCycle => RefutationDetail {
                        kind: "NoHamiltonCycle".into(),
                        nodes: None,
                        modulus: None,
                        edge_deltas: None,
                        edge_target: None,
                        cycle_total: None,
                    },
                    Refutation::Exhausted { nodes } => RefutationDetail {
                        kind: "Exhausted".into(),
                        nodes: Some(*nodes),
                        modulus: None,
                        edge_deltas: None,
                        edge_target: None,
                        cycle_total: None,
                    },
                    Refutation::KotzigObstruction { nodes } => RefutationDetail {
                        kind: "KotzigObstruction".into(),
                        nodes: Some(*nodes),
                        modulus: None,
                        edge_deltas: None,
                        edge_target: None,
                        cycle_total: None,
                    },
                    Refutation::CountingObstruction(detail) => RefutationDetail {
                        kind: "CountingObstruction".into(),
                        nodes: None,
                        modulus: detail.modulus,
                        edge_deltas: Some(detail.edge_deltas.clone()),
                        edge_target: Some(detail.edge_target),
                        cycle_total: Some(detail.cycle_total),
                    },
                });
            }
        }
        file
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serialization cannot fail")
    }

    pub fn from_json(json: &str) -> Result<Self> {
        Ok(serde_json::from_str(json)?)
    }

    pub fn base_graph(&self) -> Result<Graph> {
        parse_graph6(&self.graph6)
    }

    /// Re-runs the verifier matching `kind`. `Err` describes the first
    /// check that failed.
    pub fn verify(&self) -> Result<()> {
        if graph_hash(&self.graph6) != self.graph_sha256 {
            return Err(Error::InvalidCertificate(
                "graph hash does not match graph6 payload".into(),
            ));
        }
        let base = self.base_graph()?;
        match self.kind.as_str() {
            "HD" => {
                let cycles = self
                    .cycles
                    .as_ref()
                    .ok_or_else(|| Error::InvalidCertificate("HD record without cycles".into()))?
                    .iter()
                    .map(|c| ExplicitCycle {
                        vertices: c.vertices.clone(),
                        copies: c.copies.clone(),
                    })
                    .collect();
                let cert = HdCertificate {
                    m: self.m,
                    counts: self.counts.clone(),
                    cycles,
                };
                let mg = Multigraph::new(base, self.m)?;
                check_hd(&mg, &cert).map_err(Error::InvalidCertificate)
            }
            "P1F" => {
                let coloring = self.coloring.clone().ok_or_else(|| {
                    Error::InvalidCertificate("P1F record without coloring".into())
                })?;
                check_p1f(&base, &P1fCertificate { coloring }).map_err(Error::InvalidCertificate)
            }
            "REFUTATION" => {
                let detail = self.refutation_detail.as_ref().ok_or_else(|| {
                    Error::InvalidCertificate("refutation record without detail".into())
                })?;
                match detail.kind.as_str() {
                    "NoHamiltonCycle" => {
                        let set = enumerate_hamilton_cycles(&base, &SearchBudget::default())?;
                        if set.is_empty() {
                            Ok(())
                        } else {
                            Err(Error::InvalidCertificate(
                                "graph has a Hamilton cycle".into(),
                            ))
                        }
                    }
                    "KotzigObstruction" => {
                        if kotzig_obstruction(&base) {
                            Ok(())
                        } else {
                            Err(Error::InvalidCertificate(
                                "parity obstruction does not apply".into(),
                            ))
                        }
                    }
                    "CountingObstruction" => {
                        let counting = CountingDetail {
                            modulus: detail.modulus,
                            edge_deltas: detail.edge_deltas.clone().ok_or_else(|| {
                                Error::InvalidCertificate("counting detail without matrix".into())
                            })?,
                            edge_target: detail.edge_target.unwrap_or(self.m as u64),
                            cycle_total: detail.cycle_total.unwrap_or(0),
                        };
                        if verify_counting_detail(&counting) {
                            Ok(())
                        } else {
                            Err(Error::InvalidCertificate(
                                "residue system is feasible".into(),
                            ))
                        }
                    }
                    // An exhaustion witness has no cheap independent check;
                    // structural validity of the record is all we confirm.
                    "Exhausted" => Ok(()),
                    other => Err(Error::InvalidCertificate(format!(
                        "unknown refutation kind {:?}",
                        other
                    ))),
                }
            }
            other => Err(Error::InvalidCertificate(format!(
                "unknown certificate kind {:?}",
                other
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{complete_graph, Catalog};
    use crate::decomp::hd_feasibility;

    #[test]
    fn hd_round_trip_is_bit_exact() {
        let k4 = complete_graph(4);
        let verdict = hd_feasibility(&k4, 2, &SearchBudget::default()).unwrap();
        let file = CertificateFile::from_verdict(Some("K4"), &k4, 2, &verdict);
        let json = file.to_json();
        let parsed = CertificateFile::from_json(&json).unwrap();
        assert_eq!(file, parsed);
        assert_eq!(json, parsed.to_json());
        parsed.verify().unwrap();
    }

    #[test]
    fn refutation_round_trip() {
        let catalog = Catalog::builtin();
        let f8 = &catalog.get("F8").unwrap().graph;
        let verdict = hd_feasibility(f8, 2, &SearchBudget::default()).unwrap();
        let file = CertificateFile::from_verdict(Some("F8"), f8, 2, &verdict);
        assert_eq!(file.kind, "REFUTATION");
        let parsed = CertificateFile::from_json(&file.to_json()).unwrap();
        assert_eq!(file, parsed);
        parsed.verify().unwrap();
    }

    #[test]
    fn tampering_is_detected() {
        let k4 = complete_graph(4);
        let verdict = hd_feasibility(&k4, 2, &SearchBudget::default()).unwrap();
        let mut file = CertificateFile::from_verdict(None, &k4, 2, &verdict);

        let mut truncated = file.clone();
        truncated.cycles.as_mut().unwrap()[0].vertices.pop();
        assert!(truncated.verify().is_err());

        let mut wrong_m = file.clone();
        wrong_m.m = 1;
        assert!(wrong_m.verify().is_err());

        file.graph6 = "Bw".into(); // swap in a different graph
        assert!(file.verify().is_err());
    }

    #[test]
    fn petersen_refutation_reverifies() {
        let catalog = Catalog::builtin();
        let f10 = &catalog.get("F10").unwrap().graph;
        let verdict = hd_feasibility(f10, 1, &SearchBudget::default()).unwrap();
        let file = CertificateFile::from_verdict(Some("F10"), f10, 1, &verdict);
        assert_eq!(
            file.refutation_detail.as_ref().unwrap().kind,
            "NoHamiltonCycle"
        );
        file.verify().unwrap();
    }
}
