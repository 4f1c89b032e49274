//! Exhaustive, duplicate-free Hamilton cycle enumeration.
//!
//! Cycles are grown depth-first from vertex 0 with least-neighbor-first
//! tie-breaking; canonical form anchors the sequence at vertex 0 and takes
//! the direction with the smaller second vertex, so each undirected cycle is
//! produced exactly once.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::{BudgetMeter, SearchBudget};

/// All Hamilton cycles of a base graph, with per-edge incidence masks.
#[derive(Clone, Debug)]
pub struct HamiltonCycleSet {
    pub base: Graph,
    /// Canonical vertex sequences, sorted lexicographically.
    pub cycles: Vec<Vec<usize>>,
    /// Bit `e` of `masks[i]` is set iff cycle `i` uses base edge `e`.
    pub masks: Vec<u128>,
    /// Search nodes explored during enumeration.
    pub nodes: u64,
}

impl HamiltonCycleSet {
    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    /// δ_i(e): 1 iff cycle `i` has an edge with the endpoints of edge `e`.
    pub fn delta(&self, cycle: usize, edge: usize) -> bool {
        self.masks[cycle] & (1u128 << edge) != 0
    }
}

/// Edge incidence mask of a cycle given as a vertex sequence.
pub(crate) fn cycle_mask(g: &Graph, cycle: &[usize]) -> Result<u128> {
    if g.edge_count() > 128 {
        return Err(Error::Precondition(
            "edge incidence masks support at most 128 edges".into(),
        ));
    }
    let mut mask = 0u128;
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        let e = g
            .edge_index(a, b)
            .ok_or_else(|| Error::InvalidGraph(format!("no edge {{{}, {}}}", a, b)))?;
        mask |= 1u128 << e;
    }
    Ok(mask)
}

/// Streams every Hamilton cycle of `g` in canonical form to `visit`.
/// Returning `false` from `visit` stops the enumeration early.
pub(crate) fn for_each_hamilton_cycle<F>(
    g: &Graph,
    meter: &mut BudgetMeter,
    mut visit: F,
) -> Result<bool>
where
    F: FnMut(&[usize]) -> Result<bool>,
{
    let n = g.order();
    if n < 3 {
        return Ok(true);
    }
    let mut path = Vec::with_capacity(n);
    path.push(0usize);
    let mut visited = vec![false; n];
    visited[0] = true;
    // avail[v]: number of unvisited neighbors of v.
    let mut avail: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    for &w in g.neighbors(0) {
        avail[w] -= 1;
    }
    extend(g, &mut path, &mut visited, &mut avail, meter, &mut visit)
}

fn extend<F>(
    g: &Graph,
    path: &mut Vec<usize>,
    visited: &mut Vec<bool>,
    avail: &mut Vec<usize>,
    meter: &mut BudgetMeter,
    visit: &mut F,
) -> Result<bool>
where
    F: FnMut(&[usize]) -> Result<bool>,
{
    meter.tick()?;
    let n = g.order();
    let u = *path.last().unwrap();
    if path.len() == n {
        if g.has_edge(u, 0) && path[1] < path[n - 1] {
            return visit(path);
        }
        return Ok(true);
    }
    if !feasible(g, path, visited, avail) {
        return Ok(true);
    }
    let neighbors: Vec<usize> = g.neighbors(u).to_vec();
    for w in neighbors {
        if visited[w] {
            continue;
        }
        visited[w] = true;
        for &x in g.neighbors(w) {
            avail[x] -= 1;
        }
        path.push(w);
        let keep_going = extend(g, path, visited, avail, meter, visit)?;
        path.pop();
        for &x in g.neighbors(w) {
            avail[x] += 1;
        }
        visited[w] = false;
        if !keep_going {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Rubin-style pruning: every unvisited vertex needs two usable incident
/// edges, the two path endpoints need an exit, and the unvisited region must
/// hang together with both endpoints.
fn feasible(g: &Graph, path: &[usize], visited: &[bool], avail: &[usize]) -> bool {
    let n = g.order();
    let u = *path.last().unwrap();
    for v in 0..n {
        if visited[v] {
            continue;
        }
        let usable =
            avail[v] + usize::from(g.has_edge(v, u)) + usize::from(g.has_edge(v, 0));
        if usable < 2 {
            return false;
        }
    }
    if avail[u] == 0 || avail[0] == 0 {
        return false;
    }
    // Connectivity of unvisited ∪ {u}: all unvisited vertices must be
    // reachable from the moving endpoint without re-entering the path.
    let mut seen = vec![false; n];
    let mut stack = vec![u];
    seen[u] = true;
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if !seen[w] && !visited[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    (0..n).all(|v| visited[v] || seen[v])
}

/// Complete duplicate-free enumeration, in canonical sorted order.
pub fn enumerate_hamilton_cycles(g: &Graph, budget: &SearchBudget) -> Result<HamiltonCycleSet> {
    let mut meter = BudgetMeter::new(budget);
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    for_each_hamilton_cycle(g, &mut meter, |cycle| {
        cycles.push(cycle.to_vec());
        Ok(true)
    })?;
    cycles.sort();
    let masks = if g.edge_count() <= 128 {
        cycles
            .iter()
            .map(|c| cycle_mask(g, c))
            .collect::<Result<_>>()?
    } else {
        Vec::new()
    };
    Ok(HamiltonCycleSet {
        base: g.clone(),
        cycles,
        masks,
        nodes: meter.nodes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{complete_graph, cycle_graph, Catalog};

    fn enumerate(g: &Graph) -> HamiltonCycleSet {
        enumerate_hamilton_cycles(g, &SearchBudget::default()).unwrap()
    }

    #[test]
    fn k4_has_three_cycles() {
        let set = enumerate(&complete_graph(4));
        assert_eq!(set.len(), 3);
        for cycle in &set.cycles {
            assert_eq!(cycle.len(), 4);
            assert_eq!(cycle[0], 0);
            assert!(cycle[1] < cycle[3]);
        }
    }

    #[test]
    fn complete_graph_counts_match_factorial_formula() {
        // K_n has (n-1)!/2 Hamilton cycles.
        assert_eq!(enumerate(&complete_graph(5)).len(), 12);
        assert_eq!(enumerate(&complete_graph(6)).len(), 60);
    }

    #[test]
    fn cycle_graph_has_one() {
        let set = enumerate(&cycle_graph(5));
        assert_eq!(set.cycles, vec![vec![0, 1, 2, 3, 4]]);
    }

    #[test]
    fn petersen_has_none() {
        let catalog = Catalog::builtin();
        assert!(enumerate(&catalog.get("F10").unwrap().graph).is_empty());
    }

    #[test]
    fn cube_has_six() {
        let catalog = Catalog::builtin();
        let set = enumerate(&catalog.get("F8").unwrap().graph);
        assert_eq!(set.len(), 6);
        // Every cycle visits each vertex exactly once and uses real edges.
        let g = &catalog.get("F8").unwrap().graph;
        for cycle in &set.cycles {
            let mut seen = vec![false; 8];
            for (i, &v) in cycle.iter().enumerate() {
                assert!(!seen[v]);
                seen[v] = true;
                assert!(g.has_edge(v, cycle[(i + 1) % 8]));
            }
        }
    }

    #[test]
    fn disconnected_graph_has_none() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(enumerate(&g).is_empty());
    }

    #[test]
    fn budget_exceeded_is_reported() {
        let err = enumerate_hamilton_cycles(&complete_graph(10), &SearchBudget::nodes(5));
        assert!(matches!(err, Err(Error::BudgetExceeded { .. })));
    }
}
