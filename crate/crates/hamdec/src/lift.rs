//! Transfer of Hamilton decompositions between `mX` and `K(mX)`.
//!
//! A cycle of `mX` visits each base vertex through two arcs; inside the
//! clique on those arcs the cycle is replaced by a Hamilton path joining
//! them, taken from a Walecki decomposition of the clique with prescribed
//! endpoint pairs. Contraction reverses this by collapsing each clique run
//! to its base vertex.

use crate::constructions::ExpandedGraph;
use crate::decomp::{check_hd, ExplicitCycle, HdCertificate};
use crate::error::{Error, Result};
use crate::graph::{MultiArc, Multigraph};

/// A decomposition of the complete graph `K_n` into Hamilton paths (even
/// `n`: `n/2` of them) or Hamilton paths plus a near-perfect matching (odd
/// `n`: `(n−1)/2` paths, the matching left over).
#[derive(Clone, Debug)]
pub struct PathDecomposition {
    pub n: usize,
    pub paths: Vec<Vec<usize>>,
    pub leftover: Option<Vec<(usize, usize)>>,
}

/// Walecki decomposition of `K_n` with prescribed endpoint pairs: path `j`
/// runs from `pairs[j].0` to `pairs[j].1`. The standard zig-zag
/// decomposition has endpoint pairs `(j, j + ⌈n/2⌉)`; any prescription is
/// reached by relabeling through a vertex bijection, which is always an
/// automorphism of `K_n`.
///
/// For even `n`, `pairs` must be a perfect matching of `0..n`; for odd `n`
/// it must cover exactly `n − 1` vertices.
pub fn walecki_paths(n: usize, pairs: &[(usize, usize)]) -> Result<PathDecomposition> {
    if n < 2 {
        return Err(Error::Precondition("need at least two vertices".into()));
    }
    let t = n / 2; // path count: n/2 even, (n-1)/2 odd
    if pairs.len() != t {
        return Err(Error::Precondition(format!(
            "expected {} endpoint pairs, got {}",
            t,
            pairs.len()
        )));
    }
    let mut covered = vec![false; n];
    for &(a, b) in pairs {
        if a >= n || b >= n || a == b || covered[a] || covered[b] {
            return Err(Error::Precondition(
                "endpoint pairs must be disjoint vertex pairs".into(),
            ));
        }
        covered[a] = true;
        covered[b] = true;
    }

    // Bijection carrying the natural endpoint matching onto `pairs`.
    let h = n.div_ceil(2);
    let mut relabel = vec![usize::MAX; n];
    for (j, &(a, b)) in pairs.iter().enumerate() {
        relabel[j] = a;
        relabel[(j + h) % n] = b;
    }
    if n % 2 == 1 {
        let unmatched = covered
            .iter()
            .position(|&c| !c)
            .expect("odd order leaves one vertex unmatched");
        relabel[(n - 1) / 2] = unmatched;
    }

    // Zig-zag path j: j, j+1, j−1, j+2, j−2, …; its i-th vertex is
    // j + ⌈i/2⌉ or j − i/2 (mod n), ending at j + ⌈n/2⌉.
    let paths = (0..t)
        .map(|j| {
            (0..n)
                .map(|i| {
                    let v = if i % 2 == 1 {
                        (j + i.div_ceil(2)) % n
                    } else {
                        (j + n - i / 2) % n
                    };
                    relabel[v]
                })
                .collect()
        })
        .collect();
    let leftover = (n % 2 == 1).then(|| {
        // The unused edges {x, y} with x + y ≡ n − 1 (mod n).
        (0..(n - 1) / 2)
            .map(|x| (relabel[x], relabel[n - 1 - x]))
            .collect()
    });
    Ok(PathDecomposition { n, paths, leftover })
}

/// Lifts a Hamilton decomposition of `mX` to one of `K(mX)`.
pub fn lift_hd(e: &ExpandedGraph, cert: &HdCertificate) -> Result<HdCertificate> {
    let mg = Multigraph::new(e.base.clone(), e.m)?;
    check_hd(&mg, cert).map_err(Error::InvalidCertificate)?;
    let km = e.base.regular_valency().unwrap() * e.m;
    let t = cert.cycles.len();
    let n = e.base.order();
    if t == 0 {
        return Ok(HdCertificate {
            m: 1,
            counts: None,
            cycles: Vec::new(),
        });
    }

    // For each base vertex, the entry and exit arcs of every cycle, as
    // positions within its clique.
    let mut pairs: Vec<Vec<(usize, usize)>> = vec![Vec::with_capacity(t); n];
    let arc_vertex = |tail: usize, head: usize, copy: usize| {
        e.vertex_of_arc(MultiArc { tail, head, copy })
            .expect("arc of a verified cycle")
    };
    for cycle in &cert.cycles {
        for (i, &v) in cycle.vertices.iter().enumerate() {
            let prev = cycle.vertices[(i + cycle.vertices.len() - 1) % cycle.vertices.len()];
            let next = cycle.vertices[(i + 1) % cycle.vertices.len()];
            let copy_in = cycle.copies[(i + cycle.copies.len() - 1) % cycle.copies.len()];
            let copy_out = cycle.copies[i];
            let local = |kv: usize| {
                e.clique_of[v]
                    .iter()
                    .position(|&u| u == kv)
                    .expect("arc lies in its tail's clique")
            };
            pairs[v].push((
                local(arc_vertex(v, prev, copy_in)),
                local(arc_vertex(v, next, copy_out)),
            ));
        }
    }

    // Edge-disjoint Hamilton paths inside each clique, path j joining the
    // entry arc of cycle j to its exit arc.
    let clique_paths: Vec<Vec<Vec<usize>>> = (0..n)
        .map(|v| {
            let dec = walecki_paths(km, &pairs[v])?;
            Ok(dec
                .paths
                .into_iter()
                .map(|p| p.into_iter().map(|local| e.clique_of[v][local]).collect())
                .collect())
        })
        .collect::<Result<_>>()?;

    let cycles = cert
        .cycles
        .iter()
        .enumerate()
        .map(|(j, cycle)| {
            let mut vertices = Vec::with_capacity(e.graph.order());
            for &v in &cycle.vertices {
                vertices.extend_from_slice(&clique_paths[v][j]);
            }
            let len = vertices.len();
            ExplicitCycle {
                vertices,
                copies: vec![0; len],
            }
        })
        .collect();
    let lifted = HdCertificate {
        m: 1,
        counts: None,
        cycles,
    };
    let kg = Multigraph::new(e.graph.clone(), 1)?;
    check_hd(&kg, &lifted).map_err(Error::InvalidCertificate)?;
    Ok(lifted)
}

/// Contracts pairwise edge-disjoint Hamilton cycles of `K(mX)` to a Hamilton
/// decomposition of `mX`. Each cycle must cross each clique boundary exactly
/// twice, i.e. visit every clique in one contiguous run.
pub fn contract_hd(e: &ExpandedGraph, cycles: &[Vec<usize>]) -> Result<HdCertificate> {
    let mut contracted = Vec::with_capacity(cycles.len());
    for cycle in cycles {
        contracted.push(contract_cycle(e, cycle)?);
    }
    let cert = HdCertificate {
        m: e.m,
        counts: None,
        cycles: contracted,
    };
    let mg = Multigraph::new(e.base.clone(), e.m)?;
    check_hd(&mg, &cert).map_err(Error::InvalidCertificate)?;
    Ok(cert)
}

fn contract_cycle(e: &ExpandedGraph, cycle: &[usize]) -> Result<ExplicitCycle> {
    let len = cycle.len();
    if len != e.graph.order() {
        return Err(Error::Precondition("not a spanning cycle".into()));
    }
    // Rotate to start just after a clique boundary.
    let start = (0..len)
        .find(|&i| {
            let prev = cycle[(i + len - 1) % len];
            e.base_vertex_of(prev) != e.base_vertex_of(cycle[i])
        })
        .ok_or_else(|| Error::Precondition("cycle never leaves a clique".into()))?;

    let mut vertices = Vec::new();
    let mut copies = Vec::new();
    let at = |i: usize| cycle[(start + i) % len];
    let mut seen = vec![false; e.base.order()];
    for i in 0..len {
        let here = e.base_vertex_of(at(i));
        let next = e.base_vertex_of(at((i + 1) % len));
        if here == next {
            continue;
        }
        // Leaving the clique of `here`: the crossing must be a matching
        // edge, i.e. opposite arcs of one mX edge.
        let a = e.arc_of_vertex[at(i)];
        let b = e.arc_of_vertex[at((i + 1) % len)];
        if a.tail != b.head || a.head != b.tail || a.copy != b.copy {
            return Err(Error::Precondition(format!(
                "clique boundary {} -> {} is not a matching edge",
                here, next
            )));
        }
        if seen[here] {
            return Err(Error::Precondition(format!(
                "cycle crosses the clique of {} more than twice",
                here
            )));
        }
        seen[here] = true;
        vertices.push(here);
        copies.push(a.copy);
    }
    Ok(ExplicitCycle { vertices, copies })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::cycle_graph;
    use crate::constructions::blow_up;
    use crate::decomp::{hd_feasibility, verify_hd, Certificate, Verdict};
    use crate::SearchBudget;

    /// Checks the PathDecomposition invariants for `K_n`.
    fn check_decomposition(n: usize, pairs: &[(usize, usize)], dec: &PathDecomposition) {
        let t = n / 2;
        assert_eq!(dec.paths.len(), t);
        let mut used = std::collections::HashSet::new();
        for (j, path) in dec.paths.iter().enumerate() {
            assert_eq!(path.len(), n);
            let mut seen = vec![false; n];
            for &v in path {
                assert!(!seen[v]);
                seen[v] = true;
            }
            assert_eq!((path[0], path[n - 1]), pairs[j]);
            for w in path.windows(2) {
                let key = (w[0].min(w[1]), w[0].max(w[1]));
                assert!(used.insert(key), "edge {:?} reused", key);
            }
        }
        if let Some(matching) = &dec.leftover {
            assert_eq!(n % 2, 1);
            assert_eq!(matching.len(), (n - 1) / 2);
            for &(a, b) in matching {
                let key = (a.min(b), a.max(b));
                assert!(used.insert(key), "edge {:?} reused", key);
            }
        } else {
            assert_eq!(n % 2, 0);
        }
        assert_eq!(used.len(), n * (n - 1) / 2);
    }

    /// All ways to pick `t` disjoint ordered pairs from `0..n`.
    fn all_prescriptions(n: usize, t: usize) -> Vec<Vec<(usize, usize)>> {
        fn go(
            n: usize,
            t: usize,
            used: &mut Vec<bool>,
            acc: &mut Vec<(usize, usize)>,
            out: &mut Vec<Vec<(usize, usize)>>,
        ) {
            if acc.len() == t {
                out.push(acc.clone());
                return;
            }
            for a in 0..n {
                if used[a] {
                    continue;
                }
                for b in 0..n {
                    if used[b] || b == a {
                        continue;
                    }
                    used[a] = true;
                    used[b] = true;
                    acc.push((a, b));
                    go(n, t, used, acc, out);
                    acc.pop();
                    used[a] = false;
                    used[b] = false;
                }
            }
        }
        let mut out = Vec::new();
        go(n, t, &mut vec![false; n], &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn every_prescription_up_to_order_seven() {
        for n in 2..=7 {
            for pairs in all_prescriptions(n, n / 2) {
                let dec = walecki_paths(n, &pairs).unwrap();
                check_decomposition(n, &pairs, &dec);
            }
        }
    }

    #[test]
    fn order_two_and_three_base_cases() {
        let dec = walecki_paths(2, &[(0, 1)]).unwrap();
        assert_eq!(dec.paths, vec![vec![0, 1]]);
        assert!(dec.leftover.is_none());

        let dec = walecki_paths(3, &[(0, 1)]).unwrap();
        assert_eq!(dec.paths, vec![vec![0, 2, 1]]);
        assert_eq!(dec.leftover, Some(vec![(0, 1)]));
    }

    #[test]
    fn bad_prescriptions_rejected() {
        assert!(walecki_paths(4, &[(0, 1)]).is_err());
        assert!(walecki_paths(4, &[(0, 1), (1, 2)]).is_err());
        assert!(walecki_paths(4, &[(0, 0), (1, 2)]).is_err());
        assert!(walecki_paths(1, &[]).is_err());
    }

    fn decomposition_of(x: &crate::graph::Graph, m: usize) -> HdCertificate {
        match hd_feasibility(x, m, &SearchBudget::default()).unwrap() {
            Verdict::Decomposable(Certificate::Hd(cert)) => cert,
            other => panic!("expected a decomposition, got {:?}", other),
        }
    }

    #[test]
    fn triangle_lifts_to_hexagon() {
        let c3 = cycle_graph(3);
        let e = blow_up(&c3, 1).unwrap();
        let cert = decomposition_of(&c3, 1);
        let lifted = lift_hd(&e, &cert).unwrap();
        assert_eq!(lifted.cycles.len(), 1);
        assert_eq!(lifted.cycles[0].vertices.len(), 6);
        let kg = Multigraph::new(e.graph.clone(), 1).unwrap();
        assert!(verify_hd(&kg, &lifted));
    }

    #[test]
    fn doubled_triangle_round_trip() {
        let c3 = cycle_graph(3);
        let e = blow_up(&c3, 2).unwrap();
        let cert = decomposition_of(&c3, 2);
        let lifted = lift_hd(&e, &cert).unwrap();
        let kg = Multigraph::new(e.graph.clone(), 1).unwrap();
        assert!(verify_hd(&kg, &lifted));

        let cycle_lists: Vec<Vec<usize>> =
            lifted.cycles.iter().map(|c| c.vertices.clone()).collect();
        let back = contract_hd(&e, &cycle_lists).unwrap();
        assert_eq!(edge_usage(&c3, 2, &cert), edge_usage(&c3, 2, &back));
    }

    /// Per-(edge, copy) usage map of a certificate.
    fn edge_usage(
        x: &crate::graph::Graph,
        _m: usize,
        cert: &HdCertificate,
    ) -> std::collections::BTreeSet<(usize, usize)> {
        let mut usage = std::collections::BTreeSet::new();
        for cycle in &cert.cycles {
            for (i, &v) in cycle.vertices.iter().enumerate() {
                let w = cycle.vertices[(i + 1) % cycle.vertices.len()];
                let e = x.edge_index(v, w).unwrap();
                usage.insert((e, cycle.copies[i]));
            }
        }
        usage
    }

    #[test]
    fn square_blow_up_round_trip() {
        let c4 = cycle_graph(4);
        let e = blow_up(&c4, 2).unwrap();
        let cert = decomposition_of(&c4, 2);
        let lifted = lift_hd(&e, &cert).unwrap();
        let kg = Multigraph::new(e.graph.clone(), 1).unwrap();
        assert!(verify_hd(&kg, &lifted));
        let cycle_lists: Vec<Vec<usize>> =
            lifted.cycles.iter().map(|c| c.vertices.clone()).collect();
        let back = contract_hd(&e, &cycle_lists).unwrap();
        assert_eq!(edge_usage(&c4, 2, &cert), edge_usage(&c4, 2, &back));
    }

    #[test]
    fn contract_rejects_garbage() {
        let c3 = cycle_graph(3);
        let e = blow_up(&c3, 1).unwrap();
        // A walk that is not a cycle of the blow-up.
        assert!(contract_hd(&e, &[vec![0, 1, 2, 3, 4, 5]]).is_err());
        assert!(contract_hd(&e, &[vec![0, 1, 2]]).is_err());
    }

    #[test]
    fn lift_rejects_invalid_certificate() {
        let c3 = cycle_graph(3);
        let e = blow_up(&c3, 1).unwrap();
        let bad = HdCertificate {
            m: 1,
            counts: None,
            cycles: vec![ExplicitCycle {
                vertices: vec![0, 1, 2],
                copies: vec![0, 0, 1],
            }],
        };
        assert!(lift_hd(&e, &bad).is_err());
    }
}
