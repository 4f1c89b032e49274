//! Perfect 1-factorisation search for cubic graphs.
//!
//! A cubic graph has a perfect 1-factorisation exactly when its doubled
//! multigraph has a Hamilton decomposition: the three pairwise unions of the
//! color classes are the three cycles, and conversely. `p1f_to_hd` performs
//! the forward conversion explicitly.

use crate::decomp::{
    kotzig_obstruction, union_is_hamilton, Certificate, ExplicitCycle, HdCertificate,
    P1fCertificate, Refutation, Verdict,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::{BudgetMeter, SearchBudget};

/// Decides whether the cubic graph `x` has a perfect 1-factorisation.
/// Exhaustive over proper 3-edge-colorings, up to color permutation.
pub fn p1f_search(x: &Graph, budget: &SearchBudget) -> Result<Verdict> {
    if x.regular_valency() != Some(3) {
        return Err(Error::NotCubic);
    }
    let mut coloring: Vec<Option<u8>> = vec![None; x.edge_count()];
    // Fix the colors at vertex 0; every proper coloring is color-equivalent
    // to one of this form.
    for (c, &w) in x.neighbors(0).iter().enumerate() {
        coloring[x.edge_index(0, w).unwrap()] = Some(c as u8);
    }
    let mut meter = BudgetMeter::new(budget);
    let mut found = None;
    color_edges(x, &mut coloring, 0, &mut meter, &mut found)?;
    match found {
        Some(cert) => Ok(Verdict::Decomposable(Certificate::P1f(cert))),
        // The search never consults the parity obstruction; it is only used
        // here to label a refutation the theorem already predicted.
        None if kotzig_obstruction(x) => Ok(Verdict::NotDecomposable(
            Refutation::KotzigObstruction { nodes: meter.nodes },
        )),
        None => Ok(Verdict::NotDecomposable(Refutation::Exhausted {
            nodes: meter.nodes,
        })),
    }
}

fn color_edges(
    x: &Graph,
    coloring: &mut Vec<Option<u8>>,
    from: usize,
    meter: &mut BudgetMeter,
    found: &mut Option<P1fCertificate>,
) -> Result<bool> {
    meter.tick()?;
    let next = (from..coloring.len()).find(|&e| coloring[e].is_none());
    let Some(e) = next else {
        let full: Vec<u8> = coloring.iter().map(|c| c.unwrap()).collect();
        if [(0u8, 1u8), (0, 2), (1, 2)]
            .iter()
            .all(|&(a, b)| union_is_hamilton(x, &full, a, b))
        {
            *found = Some(P1fCertificate { coloring: full });
            return Ok(true);
        }
        return Ok(false);
    };
    let (u, v) = x.edges()[e];
    let blocked = |vert: usize| -> u8 {
        x.neighbors(vert)
            .iter()
            .filter_map(|&w| coloring[x.edge_index(vert, w).unwrap()])
            .fold(0u8, |acc, c| acc | (1 << c))
    };
    let mask = blocked(u) | blocked(v);
    for c in 0u8..3 {
        if mask & (1 << c) != 0 {
            continue;
        }
        coloring[e] = Some(c);
        if color_edges(x, coloring, e + 1, meter, found)? {
            return Ok(true);
        }
        coloring[e] = None;
    }
    Ok(false)
}

/// Converts a perfect 1-factorisation of `x` into a Hamilton decomposition
/// of `2x`: each pair of color classes is one cycle, and each edge hands out
/// its two copies to the two cycles containing it.
pub fn p1f_to_hd(x: &Graph, cert: &P1fCertificate) -> Result<HdCertificate> {
    crate::decomp::check_p1f(x, cert).map_err(Error::InvalidCertificate)?;
    let mut next_copy = vec![0usize; x.edge_count()];
    let mut cycles = Vec::with_capacity(3);
    for (a, b) in [(0u8, 1u8), (0, 2), (1, 2)] {
        let vertices = walk_union(x, &cert.coloring, a, b);
        let copies = (0..vertices.len())
            .map(|i| {
                let e = x
                    .edge_index(vertices[i], vertices[(i + 1) % vertices.len()])
                    .unwrap();
                let c = next_copy[e];
                next_copy[e] += 1;
                c
            })
            .collect();
        cycles.push(ExplicitCycle { vertices, copies });
    }
    Ok(HdCertificate {
        m: 2,
        counts: None,
        cycles,
    })
}

fn walk_union(x: &Graph, coloring: &[u8], a: u8, b: u8) -> Vec<usize> {
    let mut seq = vec![0usize];
    let mut prev = usize::MAX;
    let mut v = 0usize;
    for _ in 1..x.order() {
        let w = x
            .neighbors(v)
            .iter()
            .copied()
            .find(|&w| {
                w != prev && {
                    let c = coloring[x.edge_index(v, w).unwrap()];
                    c == a || c == b
                }
            })
            .expect("verified certificate");
        prev = v;
        v = w;
        seq.push(v);
    }
    seq
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{complete_graph, Catalog};
    use crate::decomp::{verify_hd, verify_p1f};
    use crate::graph::Multigraph;

    fn decide(x: &Graph) -> Verdict {
        p1f_search(x, &SearchBudget::default()).unwrap()
    }

    #[test]
    fn k4_has_one() {
        match decide(&complete_graph(4)) {
            Verdict::Decomposable(Certificate::P1f(cert)) => {
                assert!(verify_p1f(&complete_graph(4), &cert));
            }
            other => panic!("expected a 1-factorisation, got {:?}", other),
        }
    }

    #[test]
    fn petersen_exhausts_empty() {
        // The Petersen graph is not even 3-edge-colorable, and it is not
        // bipartite, so the refutation is by exhaustion.
        let catalog = Catalog::builtin();
        let verdict = decide(&catalog.get("F10").unwrap().graph);
        assert!(matches!(
            verdict,
            Verdict::NotDecomposable(Refutation::Exhausted { .. })
        ));
    }

    #[test]
    fn cube_blocked_by_parity() {
        let catalog = Catalog::builtin();
        let verdict = decide(&catalog.get("F8").unwrap().graph);
        assert!(matches!(
            verdict,
            Verdict::NotDecomposable(Refutation::KotzigObstruction { .. })
        ));
    }

    #[test]
    fn heawood_has_one() {
        let catalog = Catalog::builtin();
        let g = &catalog.get("F14").unwrap().graph;
        assert!(decide(g).is_decomposable());
    }

    #[test]
    fn prism_unique_factorisation_is_perfect() {
        // The prism's only 1-factorisation takes one triangle edge and one
        // rung per class, and all three pairwise unions are 6-cycles.
        let catalog = Catalog::builtin();
        let g = &catalog.get("PRISM3").unwrap().graph;
        match decide(g) {
            Verdict::Decomposable(Certificate::P1f(cert)) => {
                assert!(verify_p1f(g, &cert));
            }
            other => panic!("expected a 1-factorisation, got {:?}", other),
        }
    }

    #[test]
    fn k33_has_one() {
        // The cyclic Latin square of order 3 gives a 1-factorisation of
        // K(3,3) whose pairwise unions are all 6-cycles.
        use crate::catalog::complete_bipartite;
        let g = complete_bipartite(3, 3);
        match decide(&g) {
            Verdict::Decomposable(Certificate::P1f(cert)) => {
                assert!(verify_p1f(&g, &cert));
            }
            other => panic!("expected a 1-factorisation, got {:?}", other),
        }
    }

    #[test]
    fn conversion_to_doubled_decomposition() {
        let k4 = complete_graph(4);
        let Verdict::Decomposable(Certificate::P1f(cert)) = decide(&k4) else {
            panic!("K4 has a 1-factorisation");
        };
        let hd = p1f_to_hd(&k4, &cert).unwrap();
        let mg = Multigraph::new(k4, 2).unwrap();
        assert!(verify_hd(&mg, &hd));
    }

    #[test]
    fn non_cubic_rejected() {
        assert!(matches!(
            p1f_search(&complete_graph(5), &SearchBudget::default()),
            Err(Error::NotCubic)
        ));
    }
}
