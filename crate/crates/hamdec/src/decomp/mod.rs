//! Exact decision procedures for Hamilton decomposability: cycle-count
//! feasibility over the enumerated Hamilton cycles of the base graph, direct
//! multigraph search, perfect 1-factorisation search, the two refutation
//! shortcuts, and the certificate verifiers.

mod counting;
mod direct;
mod feasibility;
mod p1f;

pub use counting::{counting_obstruction, verify_counting_detail};
pub use direct::direct_hd_search;
pub use feasibility::{hd_feasibility, realize};
pub use p1f::{p1f_search, p1f_to_hd};

use crate::error::{Error, Result};
use crate::graph::{Graph, Multigraph};

/// One Hamilton cycle of `mX`: the vertex sequence plus, for each step
/// `v[i] → v[i+1]`, the copy index of the parallel edge used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExplicitCycle {
    pub vertices: Vec<usize>,
    pub copies: Vec<usize>,
}

impl ExplicitCycle {
    /// Canonical form: rotated to start at the smallest vertex, direction
    /// chosen so the second vertex is smaller than the last.
    pub fn canonical_vertices(&self) -> Vec<usize> {
        let n = self.vertices.len();
        let start = (0..n).min_by_key(|&i| self.vertices[i]).unwrap();
        let fwd: Vec<usize> = (0..n).map(|i| self.vertices[(start + i) % n]).collect();
        if n > 2 && fwd[1] > fwd[n - 1] {
            let mut rev = fwd.clone();
            rev[1..].reverse();
            rev
        } else {
            fwd
        }
    }
}

/// A Hamilton decomposition of `mX`, as explicit pairwise edge-disjoint
/// cycles. `counts` (when produced by the feasibility route) gives the
/// multiplicity of each enumerated base Hamilton cycle, in canonical order.
#[derive(Clone, Debug)]
pub struct HdCertificate {
    pub m: usize,
    pub counts: Option<Vec<u32>>,
    pub cycles: Vec<ExplicitCycle>,
}

/// A perfect 1-factorisation of a cubic graph: an edge coloring whose three
/// color classes are perfect matchings with pairwise Hamilton unions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct P1fCertificate {
    /// coloring[e] in {0, 1, 2} for each edge index of the base graph.
    pub coloring: Vec<u8>,
}

/// Reproducible evidence that the mod-`modulus` residue system (or the full
/// bounded box, when `modulus` is `None`) admits no solution.
#[derive(Clone, Debug)]
pub struct CountingDetail {
    pub modulus: Option<u32>,
    /// One row per base edge: δ_i(e) over the enumerated Hamilton cycles.
    pub edge_deltas: Vec<Vec<u8>>,
    /// Per-edge equation target (the multiplicity m).
    pub edge_target: u64,
    /// Required total number of cycles, km/2.
    pub cycle_total: u64,
}

#[derive(Clone, Debug)]
pub enum Refutation {
    /// The base graph has no Hamilton cycle at all.
    NoHamiltonCycle,
    /// Exhaustive search completed without finding a decomposition.
    Exhausted { nodes: u64 },
    /// The cycle-count residue system has no solution.
    CountingObstruction(CountingDetail),
    /// Exhaustive 1-factorisation search completed empty on a graph where
    /// the bipartite parity obstruction (regular bipartite, order ≡ 0 mod 4,
    /// valency ≥ 3) independently predicts that outcome.
    KotzigObstruction { nodes: u64 },
}

#[derive(Clone, Debug)]
pub enum Certificate {
    Hd(HdCertificate),
    P1f(P1fCertificate),
}

#[derive(Clone, Debug)]
pub enum Verdict {
    Decomposable(Certificate),
    NotDecomposable(Refutation),
}

impl Verdict {
    pub fn is_decomposable(&self) -> bool {
        matches!(self, Verdict::Decomposable(_))
    }
}

/// Number of cycles in a Hamilton decomposition of a k·m-valent multigraph.
pub(crate) fn cycle_target(base: &Graph, m: usize) -> Result<usize> {
    let k = base.regular_valency().ok_or(Error::NotRegular)?;
    Ok(k * m / 2)
}

/// Checks an HD certificate against `mg`; `Err` carries the first failure.
pub fn check_hd(mg: &Multigraph, cert: &HdCertificate) -> std::result::Result<(), String> {
    let base = mg.base();
    let n = base.order();
    let m = mg.multiplicity();
    if cert.m != m {
        return Err(format!(
            "certificate multiplicity {} does not match multigraph {}",
            cert.m, m
        ));
    }
    let k = base
        .regular_valency()
        .ok_or_else(|| "base graph is not regular".to_string())?;
    let t = k * m / 2;
    if cert.cycles.len() != t {
        return Err(format!(
            "expected {} cycles, certificate has {}",
            t,
            cert.cycles.len()
        ));
    }
    let mut used = std::collections::HashSet::new();
    for (ci, cycle) in cert.cycles.iter().enumerate() {
        if cycle.vertices.len() != n || cycle.copies.len() != n {
            return Err(format!("cycle {} has wrong length", ci));
        }
        let mut seen = vec![false; n];
        for (i, &v) in cycle.vertices.iter().enumerate() {
            if v >= n || seen[v] {
                return Err(format!("cycle {} is not a Hamilton cycle", ci));
            }
            seen[v] = true;
            let w = cycle.vertices[(i + 1) % n];
            let e = base
                .edge_index(v, w)
                .ok_or_else(|| format!("cycle {} uses a non-edge {{{}, {}}}", ci, v, w))?;
            let copy = cycle.copies[i];
            if copy >= m {
                return Err(format!("cycle {} uses copy index {} >= m", ci, copy));
            }
            if !used.insert((e, copy)) {
                return Err(format!(
                    "edge {{{}, {}}} copy {} is used twice",
                    v, w, copy
                ));
            }
        }
    }
    if let Some(counts) = &cert.counts {
        let total: u64 = counts.iter().map(|&c| c as u64).sum();
        if total != t as u64 {
            return Err(format!("counts sum to {}, expected {}", total, t));
        }
    }
    Ok(())
}

/// Checks cycle count, Hamiltonicity, pairwise edge-disjointness, and
/// counts consistency.
pub fn verify_hd(mg: &Multigraph, cert: &HdCertificate) -> bool {
    check_hd(mg, cert).is_ok()
}

pub fn check_p1f(x: &Graph, cert: &P1fCertificate) -> std::result::Result<(), String> {
    if x.regular_valency() != Some(3) {
        return Err("graph is not cubic".to_string());
    }
    if cert.coloring.len() != x.edge_count() {
        return Err("coloring length does not match edge count".to_string());
    }
    if cert.coloring.iter().any(|&c| c > 2) {
        return Err("color out of range".to_string());
    }
    for v in 0..x.order() {
        let mut mask = 0u8;
        for &w in x.neighbors(v) {
            let c = cert.coloring[x.edge_index(v, w).unwrap()];
            if mask & (1 << c) != 0 {
                return Err(format!("colors clash at vertex {}", v));
            }
            mask |= 1 << c;
        }
    }
    for (a, b) in [(0u8, 1u8), (0, 2), (1, 2)] {
        if !union_is_hamilton(x, &cert.coloring, a, b) {
            return Err(format!("union of colors {} and {} is not a Hamilton cycle", a, b));
        }
    }
    Ok(())
}

/// Proper 3-edge-coloring whose three pairwise unions are Hamilton cycles.
pub fn verify_p1f(x: &Graph, cert: &P1fCertificate) -> bool {
    check_p1f(x, cert).is_ok()
}

pub(crate) fn union_is_hamilton(x: &Graph, coloring: &[u8], a: u8, b: u8) -> bool {
    let n = x.order();
    if n == 0 {
        return false;
    }
    // Walk the 2-regular union starting at vertex 0.
    let next = |v: usize, prev: Option<usize>| -> Option<usize> {
        x.neighbors(v)
            .iter()
            .copied()
            .find(|&w| {
                Some(w) != prev && {
                    let c = coloring[x.edge_index(v, w).unwrap()];
                    c == a || c == b
                }
            })
    };
    let mut prev = None;
    let mut v = 0usize;
    let mut steps = 0usize;
    // The walk is deterministic on a 2-regular union; it must first return
    // to 0 after exactly n steps, not around a shorter component.
    loop {
        match next(v, prev) {
            Some(w) => {
                prev = Some(v);
                v = w;
                steps += 1;
            }
            None => return false,
        }
        if v == 0 {
            return steps == n;
        }
        if steps > n {
            return false;
        }
    }
}

/// Kotzig's parity obstruction: a regular bipartite graph of order ≡ 0
/// (mod 4) and valency at least 3 has no perfect 1-factorisation.
pub fn kotzig_obstruction(x: &Graph) -> bool {
    match x.regular_valency() {
        Some(k) if k >= 3 => x.order() % 4 == 0 && x.two_coloring().is_some(),
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{complete_graph, Catalog};
    use crate::graph::Multigraph;

    #[test]
    fn kotzig_instances() {
        let catalog = Catalog::builtin();
        assert!(kotzig_obstruction(&catalog.get("F8").unwrap().graph));
        assert!(!kotzig_obstruction(&catalog.get("F10").unwrap().graph));
        assert!(!kotzig_obstruction(&catalog.get("F14").unwrap().graph));
        assert!(kotzig_obstruction(&catalog.get("F16").unwrap().graph));
        assert!(kotzig_obstruction(&catalog.get("F20B").unwrap().graph));
    }

    #[test]
    fn verify_hd_rejects_malformed_certificates() {
        // 2K4 decomposed into three 4-cycles; then break it in various ways.
        let k4 = complete_graph(4);
        let mg = Multigraph::new(k4, 2).unwrap();
        let good = HdCertificate {
            m: 2,
            counts: None,
            cycles: vec![
                ExplicitCycle {
                    vertices: vec![0, 1, 2, 3],
                    copies: vec![0, 0, 0, 0],
                },
                ExplicitCycle {
                    vertices: vec![0, 1, 3, 2],
                    copies: vec![1, 0, 1, 1],
                },
                ExplicitCycle {
                    vertices: vec![0, 2, 1, 3],
                    copies: vec![0, 1, 1, 1],
                },
            ],
        };
        assert!(verify_hd(&mg, &good));

        let mut repeated = good.clone();
        repeated.cycles[1] = repeated.cycles[0].clone();
        assert!(!verify_hd(&mg, &repeated));

        let mut short = good.clone();
        short.cycles.pop();
        assert!(!verify_hd(&mg, &short));

        let mut wrong_m = good.clone();
        wrong_m.m = 1;
        assert!(!verify_hd(&mg, &wrong_m));
    }

    #[test]
    fn verify_p1f_k4() {
        let k4 = complete_graph(4);
        // K4 edges in from_edges order: 01 02 03 12 13 23. The unique
        // 1-factorisation pairs opposite edges.
        let coloring = |pairs: [(usize, usize); 6]| {
            let mut c = vec![0u8; 6];
            for (e, col) in pairs {
                c[e] = col as u8;
            }
            c
        };
        let cert = P1fCertificate {
            coloring: coloring([(0, 0), (5, 0), (1, 1), (4, 1), (2, 2), (3, 2)]),
        };
        assert!(verify_p1f(&k4, &cert));

        let improper = P1fCertificate {
            coloring: vec![0, 0, 0, 1, 1, 2],
        };
        assert!(!verify_p1f(&k4, &improper));
    }

    #[test]
    fn canonical_cycle_form() {
        let c = ExplicitCycle {
            vertices: vec![2, 1, 0, 3],
            copies: vec![0; 4],
        };
        assert_eq!(c.canonical_vertices(), vec![0, 1, 2, 3]);
    }
}
