//! Automorphism groups, transitivity predicates, isomorphism testing, and
//! the expanded action of `Aut(X) × Z_m` on `K(mX)`.
//!
//! Automorphism and isomorphism searches use equitable-partition refinement
//! with backtracking; target scale is a couple of hundred vertices.

use crate::constructions::ExpandedGraph;
use crate::error::{Error, Result};
use crate::graph::{Graph, MultiArc};
use crate::perm::{orbit_closure, ChainLevel, PermGroup, Permutation};
use crate::refine::{automorphism_candidates, find_isomorphism, fixes_everything};
use crate::{BudgetMeter, SearchBudget};

/// The full automorphism group, with exact order, computed by an
/// orbit-stabilizer chain of refinement-backed backtracking searches.
pub fn automorphism_group(g: &Graph) -> Result<PermGroup> {
    automorphism_group_with(g, &SearchBudget::default())
}

pub fn automorphism_group_with(g: &Graph, budget: &SearchBudget) -> Result<PermGroup> {
    let n = g.order();
    let mut meter = BudgetMeter::new(budget);
    let mut generators: Vec<Permutation> = Vec::new();
    let mut chain: Vec<ChainLevel> = Vec::new();
    let mut prefix: Vec<usize> = Vec::new();

    loop {
        if prefix.len() == n || fixes_everything(g, &prefix) {
            break;
        }
        // Base point: smallest vertex whose image is not forced yet.
        let base = match pick_base(g, &prefix)? {
            Some(b) => b,
            None => break,
        };
        let candidates = automorphism_candidates(g, &prefix, base)?
            .ok_or_else(|| Error::InvalidGraph("refinement failed on identity".into()))?;
        let mut level_gens: Vec<Permutation> = Vec::new();
        let mut transversal = std::collections::HashMap::new();
        transversal.insert(base, Permutation::identity(n));
        for v in candidates {
            if transversal.contains_key(&v) {
                continue;
            }
            let mut forced: Vec<(usize, usize)> = prefix.iter().map(|&b| (b, b)).collect();
            forced.push((base, v));
            if let Some(images) = find_isomorphism(g, g, &forced, &mut meter)? {
                let perm = Permutation::from_images(images)?;
                level_gens.push(perm);
                // Close the orbit under the generators found so far to skip
                // redundant searches.
                close_transversal(&mut transversal, &level_gens);
            }
        }
        generators.extend(level_gens);
        chain.push(ChainLevel {
            base_point: base,
            transversal,
        });
        prefix.push(base);
    }
    Ok(PermGroup::from_chain(n, generators, chain))
}

fn pick_base(g: &Graph, prefix: &[usize]) -> Result<Option<usize>> {
    for v in 0..g.order() {
        if prefix.contains(&v) {
            continue;
        }
        match automorphism_candidates(g, prefix, v)? {
            Some(class) if class.len() > 1 => return Ok(Some(v)),
            _ => continue,
        }
    }
    Ok(None)
}

fn close_transversal(
    transversal: &mut std::collections::HashMap<usize, Permutation>,
    gens: &[Permutation],
) {
    let mut queue: Vec<usize> = transversal.keys().copied().collect();
    while let Some(v) = queue.pop() {
        let rep = transversal[&v].clone();
        for gen in gens {
            let w = gen.apply(v);
            if !transversal.contains_key(&w) {
                transversal.insert(w, rep.then(gen));
                queue.push(w);
            }
        }
    }
}

/// True iff Aut(g) has a single vertex orbit. Computed by targeted searches
/// for automorphisms carrying vertex 0 to each vertex, closing the orbit
/// under the generators found along the way.
pub fn is_vertex_transitive(g: &Graph) -> Result<bool> {
    is_vertex_transitive_with(g, &SearchBudget::default())
}

pub fn is_vertex_transitive_with(g: &Graph, budget: &SearchBudget) -> Result<bool> {
    let n = g.order();
    if n <= 1 {
        return Ok(true);
    }
    let candidates = match automorphism_candidates(g, &[], 0)? {
        Some(c) => c,
        None => return Ok(false),
    };
    if candidates.len() != n {
        // Refinement separates vertex classes, so no automorphism can merge
        // them.
        return Ok(false);
    }
    let mut meter = BudgetMeter::new(budget);
    let mut gens: Vec<Permutation> = Vec::new();
    let mut in_orbit = vec![false; n];
    in_orbit[0] = true;
    for v in 1..n {
        if in_orbit[v] {
            continue;
        }
        match find_isomorphism(g, g, &[(0, v)], &mut meter)? {
            Some(images) => {
                gens.push(Permutation::from_images(images)?);
                let reach = orbit_closure(n, &gens, 0, |p, x| p.apply(x));
                for (w, hit) in reach.iter().enumerate() {
                    if *hit {
                        in_orbit[w] = true;
                    }
                }
            }
            None => return Ok(false),
        }
    }
    Ok(true)
}

/// True iff the induced action of Aut(g) on arcs has a single orbit.
pub fn is_arc_transitive(g: &Graph) -> Result<bool> {
    is_arc_transitive_with(g, &SearchBudget::default())
}

pub fn is_arc_transitive_with(g: &Graph, budget: &SearchBudget) -> Result<bool> {
    let arcs = g.arcs();
    if arcs.is_empty() {
        return Ok(true);
    }
    let group = automorphism_group_with(g, budget)?;
    let index: std::collections::HashMap<(usize, usize), usize> = arcs
        .iter()
        .enumerate()
        .map(|(i, a)| ((a.tail, a.head), i))
        .collect();
    let reach = orbit_closure(arcs.len(), group.generators(), 0, |p, i| {
        let a = arcs[i];
        index[&(p.apply(a.tail), p.apply(a.head))]
    });
    Ok(reach.iter().all(|&hit| hit))
}

fn check_is_automorphism(x: &Graph, p: &Permutation) -> Result<()> {
    if p.degree() != x.order() {
        return Err(Error::NotAnAutomorphism(format!(
            "degree {} does not match order {}",
            p.degree(),
            x.order()
        )));
    }
    for &(a, b) in x.edges() {
        if !x.has_edge(p.apply(a), p.apply(b)) {
            return Err(Error::NotAnAutomorphism(format!("{}", p)));
        }
    }
    Ok(())
}

/// True iff `h` (verified to consist of automorphisms of `x`) acts regularly
/// on the arcs of `x`: transitively with trivial point stabilizers,
/// equivalently transitively with `|h|` equal to the arc count.
pub fn verify_regular_arc_action(x: &Graph, h: &PermGroup) -> Result<bool> {
    if h.degree() != x.order() {
        return Err(Error::NotAnAutomorphism(format!(
            "group degree {} does not match graph order {}",
            h.degree(),
            x.order()
        )));
    }
    for gen in h.generators() {
        check_is_automorphism(x, gen)?;
    }
    let arcs = x.arcs();
    if h.order() != arcs.len() as u128 {
        return Ok(false);
    }
    if arcs.is_empty() {
        return Ok(true);
    }
    let index: std::collections::HashMap<(usize, usize), usize> = arcs
        .iter()
        .enumerate()
        .map(|(i, a)| ((a.tail, a.head), i))
        .collect();
    let reach = orbit_closure(arcs.len(), h.generators(), 0, |p, i| {
        let a = arcs[i];
        index[&(p.apply(a.tail), p.apply(a.head))]
    });
    Ok(reach.iter().all(|&hit| hit))
}

/// The action `(x,y)_i (g,a) = (xg, yg)_{i+a}` of `Aut(X) × Z_m` on the
/// vertices of `K(mX)`, returned as a vertex permutation of the blow-up.
pub fn expanded_action(e: &ExpandedGraph, g: &Permutation, a: usize) -> Result<Permutation> {
    check_is_automorphism(&e.base, g).map_err(|_| {
        Error::NotAnAutomorphism("permutation is not an automorphism of the base graph".into())
    })?;
    if a >= e.m {
        return Err(Error::Precondition(format!(
            "copy shift {} out of range for multiplicity {}",
            a, e.m
        )));
    }
    let images: Vec<usize> = e
        .arc_of_vertex
        .iter()
        .map(|arc| {
            let image = MultiArc {
                tail: g.apply(arc.tail),
                head: g.apply(arc.head),
                copy: (arc.copy + a) % e.m,
            };
            e.vertex_of_arc(image)
                .expect("automorphism maps arcs to arcs")
        })
        .collect();
    Permutation::from_images(images)
}

/// A vertex bijection mapping edges exactly onto edges, if one exists.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<Option<Permutation>> {
    is_isomorphic_with(g, h, &SearchBudget::default())
}

pub fn is_isomorphic_with(
    g: &Graph,
    h: &Graph,
    budget: &SearchBudget,
) -> Result<Option<Permutation>> {
    let mut meter = BudgetMeter::new(budget);
    match find_isomorphism(g, h, &[], &mut meter)? {
        Some(images) => Ok(Some(Permutation::from_images(images)?)),
        None => Ok(None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{complete_graph, cycle_graph, triangular_prism, Catalog};
    use crate::constructions::blow_up;

    #[test]
    fn aut_k4_is_sym4() {
        let group = automorphism_group(&complete_graph(4)).unwrap();
        assert_eq!(group.order(), 24);
    }

    #[test]
    fn aut_petersen_order_120() {
        let catalog = Catalog::builtin();
        let group = automorphism_group(&catalog.get("F10").unwrap().graph).unwrap();
        assert_eq!(group.order(), 120);
    }

    #[test]
    fn aut_cycle_is_dihedral() {
        let group = automorphism_group(&cycle_graph(6)).unwrap();
        assert_eq!(group.order(), 12);
    }

    #[test]
    fn prism_vertex_but_not_arc_transitive() {
        let prism = triangular_prism();
        assert!(is_vertex_transitive(&prism).unwrap());
        assert!(!is_arc_transitive(&prism).unwrap());
    }

    #[test]
    fn k2_is_arc_transitive() {
        let k2 = complete_graph(2);
        assert!(is_vertex_transitive(&k2).unwrap());
        assert!(is_arc_transitive(&k2).unwrap());
    }

    #[test]
    fn petersen_is_arc_transitive() {
        let catalog = Catalog::builtin();
        assert!(is_arc_transitive(&catalog.get("F10").unwrap().graph).unwrap());
    }

    #[test]
    fn full_aut_of_petersen_is_not_arc_regular() {
        let catalog = Catalog::builtin();
        let f10 = &catalog.get("F10").unwrap().graph;
        let group = automorphism_group(f10).unwrap();
        // 120 elements vs 30 arcs: transitive but not regular.
        assert!(!verify_regular_arc_action(f10, &group).unwrap());
    }

    #[test]
    fn trivial_group_is_not_arc_regular_on_k2() {
        let k2 = complete_graph(2);
        let trivial = PermGroup::trivial(2);
        assert!(!verify_regular_arc_action(&k2, &trivial).unwrap());
    }

    #[test]
    fn regular_arc_action_rejects_non_automorphism() {
        let c4 = cycle_graph(4);
        let bad =
            PermGroup::from_generators(4, vec![Permutation::parse_cycles("(0 1)", 4).unwrap()])
                .unwrap();
        assert!(matches!(
            verify_regular_arc_action(&c4, &bad),
            Err(Error::NotAnAutomorphism(_))
        ));
    }

    #[test]
    fn expanded_action_identity() {
        let catalog = Catalog::builtin();
        let e = blow_up(&catalog.get("F8").unwrap().graph, 2).unwrap();
        let id = Permutation::identity(8);
        assert!(expanded_action(&e, &id, 0).unwrap().is_identity());
    }

    #[test]
    fn expanded_action_copy_shift_is_fixed_point_free() {
        let catalog = Catalog::builtin();
        let f8 = &catalog.get("F8").unwrap().graph;
        let e = blow_up(f8, 2).unwrap();
        let group = automorphism_group(f8).unwrap();
        for g in group.generators().iter().take(3) {
            let p = expanded_action(&e, g, 1).unwrap();
            assert!((0..e.graph.order()).all(|v| p.apply(v) != v));
            // Images preserve adjacency of the blow-up.
            for &(u, v) in e.graph.edges() {
                assert!(e.graph.has_edge(p.apply(u), p.apply(v)));
            }
        }
    }

    #[test]
    fn expanded_action_composition_law() {
        let catalog = Catalog::builtin();
        let f8 = &catalog.get("F8").unwrap().graph;
        let e = blow_up(f8, 3).unwrap();
        let group = automorphism_group(f8).unwrap();
        let gens = group.generators();
        let (g1, g2) = (&gens[0], &gens[1 % gens.len()]);
        for (a1, a2) in [(0, 1), (1, 2), (2, 2)] {
            let lhs = expanded_action(&e, g1, a1)
                .unwrap()
                .then(&expanded_action(&e, g2, a2).unwrap());
            let rhs = expanded_action(&e, &g1.then(g2), (a1 + a2) % 3).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn expanded_action_rejects_non_automorphism() {
        let catalog = Catalog::builtin();
        let e = blow_up(&catalog.get("F10").unwrap().graph, 1).unwrap();
        let not_auto = Permutation::parse_cycles("(0 1)", 10).unwrap();
        assert!(expanded_action(&e, &not_auto, 0).is_err());
    }

    #[test]
    fn c6_not_isomorphic_to_prism() {
        let got = is_isomorphic(&cycle_graph(6), &triangular_prism()).unwrap();
        assert!(got.is_none());
    }

    #[test]
    fn petersen_relabelings_are_isomorphic() {
        let catalog = Catalog::builtin();
        let f10 = &catalog.get("F10").unwrap().graph;
        // Relabel through an arbitrary permutation and recover a witness.
        let p = Permutation::parse_cycles("(0 3 7)(1 9)(2 4 6 8)", 10).unwrap();
        let edges: Vec<(usize, usize)> = f10
            .edges()
            .iter()
            .map(|&(a, b)| (p.apply(a), p.apply(b)))
            .collect();
        let relabeled = Graph::from_edges(10, &edges).unwrap();
        let witness = is_isomorphic(f10, &relabeled).unwrap().unwrap();
        for &(a, b) in f10.edges() {
            assert!(relabeled.has_edge(witness.apply(a), witness.apply(b)));
        }
    }

    #[test]
    fn f20a_and_f20b_are_not_isomorphic() {
        let catalog = Catalog::builtin();
        let a = &catalog.get("F20A").unwrap().graph;
        let b = &catalog.get("F20B").unwrap().graph;
        assert!(is_isomorphic(a, b).unwrap().is_none());
    }
}
