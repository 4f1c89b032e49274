//! Hamilton decomposability of `mX` by integer feasibility over the
//! Hamilton cycles of `X`.
//!
//! Every Hamilton cycle of `mX` projects to a Hamilton cycle of `X`, and a
//! multiset of base cycles with per-edge usage at most `m` lifts back by
//! assigning distinct copy indices, so `mX` decomposes iff some nonnegative
//! count vector `n` over the base cycles has `Σ n_i = ⌊km/2⌋` and
//! `Σ δ_i(e) n_i ≤ m` on every edge. The reduction is cross-validated
//! against the independent multigraph search in the test suites.

use std::collections::HashMap;

use crate::decomp::counting::modular_obstruction;
use crate::decomp::{
    cycle_target, Certificate, CountingDetail, ExplicitCycle, HdCertificate, Refutation, Verdict,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hamilton::{cycle_mask, enumerate_hamilton_cycles, for_each_hamilton_cycle};
use crate::{BudgetMeter, SearchBudget};

/// Decides whether `mX` has a Hamilton decomposition.
pub fn hd_feasibility(x: &Graph, m: usize, budget: &SearchBudget) -> Result<Verdict> {
    if m == 0 {
        return Err(Error::BadMultiplicity);
    }
    let t = cycle_target(x, m)?;
    if t == 0 {
        return Ok(Verdict::Decomposable(Certificate::Hd(HdCertificate {
            m,
            counts: Some(Vec::new()),
            cycles: Vec::new(),
        })));
    }
    let k = x.regular_valency().unwrap();
    let equality = (k * m) % 2 == 0;

    // 2-cycle equality instances (4-valent simple graphs) stream: a
    // decomposition is a Hamilton cycle whose edge complement is a single
    // cycle, so no cycle storage is needed.
    if equality && t == 2 && m == 1 {
        return stream_two_cycle_case(x, budget);
    }

    let cycles = enumerate_hamilton_cycles(x, budget)?;
    if cycles.is_empty() {
        return Ok(Verdict::NotDecomposable(Refutation::NoHamiltonCycle));
    }

    if equality {
        // Cheap residue shortcut before the exact search.
        if let Some(modulus) = modular_obstruction(&cycles, m, t) {
            return Ok(Verdict::NotDecomposable(Refutation::CountingObstruction(
                CountingDetail {
                    modulus: Some(modulus),
                    edge_deltas: delta_rows(&cycles.masks, x.edge_count()),
                    edge_target: m as u64,
                    cycle_total: t as u64,
                },
            )));
        }
    }

    let mut meter = BudgetMeter::new(budget);
    match search_counts(x, &cycles.masks, m, t, equality, &mut meter)? {
        Some(counts) => {
            let cert = realize_from_masks(x, m, &counts, &cycles.cycles)?;
            Ok(Verdict::Decomposable(Certificate::Hd(cert)))
        }
        None => Ok(Verdict::NotDecomposable(Refutation::Exhausted {
            nodes: meter.nodes,
        })),
    }
}

pub(crate) fn delta_rows(masks: &[u128], num_edges: usize) -> Vec<Vec<u8>> {
    (0..num_edges)
        .map(|e| {
            masks
                .iter()
                .map(|&mask| u8::from(mask & (1u128 << e) != 0))
                .collect()
        })
        .collect()
}

fn stream_two_cycle_case(x: &Graph, budget: &SearchBudget) -> Result<Verdict> {
    if x.edge_count() > 128 {
        return Err(Error::Precondition("too many edges for edge masks".into()));
    }
    let full: u128 = if x.edge_count() == 128 {
        u128::MAX
    } else {
        (1u128 << x.edge_count()) - 1
    };
    let mut meter = BudgetMeter::new(budget);
    let mut found: Option<(Vec<usize>, Vec<usize>)> = None;
    let mut any = false;
    for_each_hamilton_cycle(x, &mut meter, |cycle| {
        any = true;
        let mask = cycle_mask(x, cycle)?;
        if let Some(partner) = single_cycle_from_mask(x, full & !mask) {
            found = Some((cycle.to_vec(), partner));
            return Ok(false);
        }
        Ok(true)
    })?;
    match found {
        Some((a, b)) => {
            let zero = vec![0; x.order()];
            let cert = HdCertificate {
                m: 1,
                counts: None,
                cycles: vec![
                    ExplicitCycle {
                        vertices: a,
                        copies: zero.clone(),
                    },
                    ExplicitCycle {
                        vertices: b,
                        copies: zero,
                    },
                ],
            };
            Ok(Verdict::Decomposable(Certificate::Hd(cert)))
        }
        None if !any => Ok(Verdict::NotDecomposable(Refutation::NoHamiltonCycle)),
        None => Ok(Verdict::NotDecomposable(Refutation::Exhausted {
            nodes: meter.nodes,
        })),
    }
}

/// If the edge subset is a single spanning cycle, returns it as a vertex
/// sequence.
fn single_cycle_from_mask(x: &Graph, mask: u128) -> Option<Vec<usize>> {
    let n = x.order();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (e, &(a, b)) in x.edges().iter().enumerate() {
        if mask & (1u128 << e) != 0 {
            incident[a].push(b);
            incident[b].push(a);
        }
    }
    if incident.iter().any(|nbrs| nbrs.len() != 2) {
        return None;
    }
    let mut seq = vec![0usize];
    let mut prev = usize::MAX;
    let mut v = 0usize;
    for _ in 1..n {
        let w = if incident[v][0] != prev {
            incident[v][0]
        } else {
            incident[v][1]
        };
        prev = v;
        v = w;
        if v == 0 {
            return None;
        }
        seq.push(v);
    }
    let last = *seq.last().unwrap();
    (incident[last].contains(&0) && prev != 0).then_some(seq)
}

/// Depth-first search over nonnegative cycle-count vectors with per-edge
/// capacity propagation; cycles are tried in nondecreasing index order so
/// each multiset is visited once.
pub(crate) fn search_counts(
    x: &Graph,
    masks: &[u128],
    m: usize,
    t: usize,
    equality: bool,
    meter: &mut BudgetMeter,
) -> Result<Option<Vec<u32>>> {
    let num_edges = x.edge_count();
    let mut caps: Vec<u32> = vec![m as u32; num_edges];
    // vertex_cap[v] = total remaining capacity of edges at v; a vertex needs
    // 2 units per remaining cycle.
    let mut vertex_cap: Vec<u64> = (0..x.order())
        .map(|v| (x.degree(v) * m) as u64)
        .collect();
    // Sort cycles by decreasing overlap with the rest of the cycle set so
    // the most constrained choices come first.
    let mut order: Vec<usize> = (0..masks.len()).collect();
    let popularity: Vec<u64> = {
        let mut per_edge = vec![0u64; num_edges];
        for &mask in masks {
            for (e, cnt) in per_edge.iter_mut().enumerate() {
                *cnt += u64::from(mask & (1u128 << e) != 0);
            }
        }
        masks
            .iter()
            .map(|&mask| {
                (0..num_edges)
                    .filter(|&e| mask & (1u128 << e) != 0)
                    .map(|e| per_edge[e])
                    .sum()
            })
            .collect()
    };
    order.sort_by_key(|&i| std::cmp::Reverse(popularity[i]));
    let ordered_masks: Vec<u128> = order.iter().map(|&i| masks[i]).collect();
    let by_mask: HashMap<u128, usize> = ordered_masks
        .iter()
        .enumerate()
        .map(|(i, &mask)| (mask, i))
        .collect();

    let mut chosen: Vec<usize> = Vec::new();
    let found = dfs_counts(
        x,
        &ordered_masks,
        &by_mask,
        m as u32,
        t,
        equality,
        0,
        &mut caps,
        &mut vertex_cap,
        &mut chosen,
        meter,
    )?;
    if !found {
        return Ok(None);
    }
    let mut counts = vec![0u32; masks.len()];
    for &pos in &chosen {
        counts[order[pos]] += 1;
    }
    Ok(Some(counts))
}

#[allow(clippy::too_many_arguments)]
fn dfs_counts(
    x: &Graph,
    masks: &[u128],
    by_mask: &HashMap<u128, usize>,
    m: u32,
    remaining: usize,
    equality: bool,
    start: usize,
    caps: &mut Vec<u32>,
    vertex_cap: &mut Vec<u64>,
    chosen: &mut Vec<usize>,
    meter: &mut BudgetMeter,
) -> Result<bool> {
    meter.tick()?;
    if remaining == 0 {
        return Ok(!equality || caps.iter().all(|&c| c == 0));
    }
    if vertex_cap.iter().any(|&c| c < 2 * remaining as u64) {
        return Ok(false);
    }
    if equality && caps.iter().any(|&c| c > remaining as u32) {
        return Ok(false);
    }
    if remaining == 1 && equality {
        // The final cycle is forced: exactly the edges with one unit left.
        let mut needed = 0u128;
        for (e, &c) in caps.iter().enumerate() {
            if c == 1 {
                needed |= 1u128 << e;
            } else if c != 0 {
                return Ok(false);
            }
        }
        return Ok(match by_mask.get(&needed) {
            Some(&idx) if idx >= start => {
                chosen.push(idx);
                true
            }
            _ => false,
        });
    }
    for i in start..masks.len() {
        let mask = masks[i];
        if !mask_fits(mask, caps) {
            continue;
        }
        apply_mask(x, mask, caps, vertex_cap, -1);
        chosen.push(i);
        let ok = dfs_counts(
            x, masks, by_mask, m, remaining - 1, equality, i, caps, vertex_cap, chosen, meter,
        )?;
        if ok {
            return Ok(true);
        }
        chosen.pop();
        apply_mask(x, mask, caps, vertex_cap, 1);
    }
    Ok(false)
}

fn mask_fits(mask: u128, caps: &[u32]) -> bool {
    let mut rest = mask;
    while rest != 0 {
        let e = rest.trailing_zeros() as usize;
        if caps[e] == 0 {
            return false;
        }
        rest &= rest - 1;
    }
    true
}

fn apply_mask(x: &Graph, mask: u128, caps: &mut [u32], vertex_cap: &mut [u64], sign: i64) {
    let mut rest = mask;
    while rest != 0 {
        let e = rest.trailing_zeros() as usize;
        caps[e] = (caps[e] as i64 + sign) as u32;
        let (a, b) = x.edges()[e];
        vertex_cap[a] = (vertex_cap[a] as i64 + sign) as u64;
        vertex_cap[b] = (vertex_cap[b] as i64 + sign) as u64;
        rest &= rest - 1;
    }
}

/// Materializes a count vector as explicit edge-disjoint cycles of `mX`:
/// the cycles crossing each base edge take distinct copy indices in order
/// of cycle index.
pub fn realize(
    x: &Graph,
    m: usize,
    counts: &[u32],
    cycles: &[Vec<usize>],
) -> Result<HdCertificate> {
    if counts.len() != cycles.len() {
        return Err(Error::Precondition(
            "count vector length does not match cycle list".into(),
        ));
    }
    let t = cycle_target(x, m)?;
    let total: u64 = counts.iter().map(|&c| c as u64).sum();
    if total != t as u64 {
        return Err(Error::Precondition(format!(
            "counts sum to {}, expected {}",
            total, t
        )));
    }
    let mut usage = vec![0u64; x.edge_count()];
    for (i, cycle) in cycles.iter().enumerate() {
        if counts[i] == 0 {
            continue;
        }
        let mask = cycle_mask(x, cycle)?;
        for e in 0..x.edge_count() {
            if mask & (1u128 << e) != 0 {
                usage[e] += counts[i] as u64;
            }
        }
    }
    if let Some(e) = usage.iter().position(|&u| u > m as u64) {
        return Err(Error::Precondition(format!(
            "edge {} is used {} times but m = {}",
            e, usage[e], m
        )));
    }
    realize_from_masks(x, m, counts, cycles)
}

fn realize_from_masks(
    x: &Graph,
    m: usize,
    counts: &[u32],
    cycles: &[Vec<usize>],
) -> Result<HdCertificate> {
    let mut next_copy = vec![0usize; x.edge_count()];
    let mut explicit = Vec::new();
    for (i, cycle) in cycles.iter().enumerate() {
        for _ in 0..counts[i] {
            let mut copies = Vec::with_capacity(cycle.len());
            for j in 0..cycle.len() {
                let e = x
                    .edge_index(cycle[j], cycle[(j + 1) % cycle.len()])
                    .ok_or_else(|| Error::Precondition("cycle uses a non-edge".into()))?;
                copies.push(next_copy[e]);
                next_copy[e] += 1;
            }
            explicit.push(ExplicitCycle {
                vertices: cycle.clone(),
                copies,
            });
        }
    }
    Ok(HdCertificate {
        m,
        counts: Some(counts.to_vec()),
        cycles: explicit,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{complete_graph, cycle_graph, Catalog};
    use crate::decomp::verify_hd;
    use crate::graph::Multigraph;

    fn decide(x: &Graph, m: usize) -> Verdict {
        hd_feasibility(x, m, &SearchBudget::default()).unwrap()
    }

    fn assert_decomposable(x: &Graph, m: usize) {
        match decide(x, m) {
            Verdict::Decomposable(Certificate::Hd(cert)) => {
                let mg = Multigraph::new(x.clone(), m).unwrap();
                assert!(verify_hd(&mg, &cert));
            }
            other => panic!("expected decomposable, got {:?}", other),
        }
    }

    #[test]
    fn petersen_has_no_hamilton_cycle() {
        let catalog = Catalog::builtin();
        let verdict = decide(&catalog.get("F10").unwrap().graph, 1);
        assert!(matches!(
            verdict,
            Verdict::NotDecomposable(Refutation::NoHamiltonCycle)
        ));
    }

    #[test]
    fn doubled_cube_is_not_decomposable() {
        let catalog = Catalog::builtin();
        let verdict = decide(&catalog.get("F8").unwrap().graph, 2);
        assert!(!verdict.is_decomposable());
    }

    #[test]
    fn doubled_heawood_is_decomposable() {
        let catalog = Catalog::builtin();
        assert_decomposable(&catalog.get("F14").unwrap().graph, 2);
    }

    #[test]
    fn quadrupled_cube_is_decomposable() {
        let catalog = Catalog::builtin();
        assert_decomposable(&catalog.get("F8").unwrap().graph, 4);
    }

    #[test]
    fn doubled_k4_realization() {
        // Each K4 edge lies on exactly 2 of the 3 Hamilton cycles, so the
        // all-ones count vector is a decomposition of 2K4.
        let k4 = complete_graph(4);
        let set = enumerate_hamilton_cycles(&k4, &SearchBudget::default()).unwrap();
        let cert = realize(&k4, 2, &[1, 1, 1], &set.cycles).unwrap();
        let mg = Multigraph::new(k4, 2).unwrap();
        assert!(verify_hd(&mg, &cert));
    }

    #[test]
    fn realize_rejects_capacity_violation() {
        let k4 = complete_graph(4);
        let set = enumerate_hamilton_cycles(&k4, &SearchBudget::default()).unwrap();
        assert!(realize(&k4, 1, &[1, 1, 0], &set.cycles).is_err());
        assert!(realize(&k4, 2, &[1, 1, 0], &set.cycles).is_err());
    }

    #[test]
    fn single_cycle_realization() {
        let c5 = cycle_graph(5);
        let set = enumerate_hamilton_cycles(&c5, &SearchBudget::default()).unwrap();
        let cert = realize(&c5, 1, &[1], &set.cycles).unwrap();
        assert_eq!(cert.cycles.len(), 1);
        let mg = Multigraph::new(c5, 1).unwrap();
        assert!(verify_hd(&mg, &cert));
    }

    #[test]
    fn hamiltonian_cubic_at_m1_gives_one_cycle() {
        let catalog = Catalog::builtin();
        for name in ["F8", "F14", "F16"] {
            match decide(&catalog.get(name).unwrap().graph, 1) {
                Verdict::Decomposable(Certificate::Hd(cert)) => {
                    assert_eq!(cert.cycles.len(), 1, "{}", name);
                }
                other => panic!("{}: expected decomposable, got {:?}", name, other),
            }
        }
    }

    #[test]
    fn k2_trivially_decomposable() {
        let verdict = decide(&complete_graph(2), 1);
        assert!(verdict.is_decomposable());
    }

    #[test]
    fn non_regular_input_is_rejected() {
        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(matches!(
            hd_feasibility(&path, 1, &SearchBudget::default()),
            Err(Error::NotRegular)
        ));
    }
}
