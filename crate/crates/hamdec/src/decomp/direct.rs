//! Direct Hamilton decomposition search on the multigraph itself, without
//! the cycle-count reduction. Much slower than the feasibility route, but
//! structurally independent of it, which makes it the cross-check oracle in
//! the test suites.

use crate::decomp::{cycle_target, Certificate, ExplicitCycle, HdCertificate, Refutation, Verdict};
use crate::error::Result;
use crate::graph::{Graph, Multigraph};
use crate::{BudgetMeter, SearchBudget};

/// Decides Hamilton decomposability of `mg` by building the `⌊km/2⌋` cycles
/// one edge at a time against per-edge capacities.
pub fn direct_hd_search(mg: &Multigraph, budget: &SearchBudget) -> Result<Verdict> {
    let x = mg.base();
    let m = mg.multiplicity();
    let t = cycle_target(x, m)?;
    if t == 0 {
        return Ok(Verdict::Decomposable(Certificate::Hd(HdCertificate {
            m,
            counts: None,
            cycles: Vec::new(),
        })));
    }
    let mut state = State {
        x,
        caps: vec![m as u32; x.edge_count()],
        cycles: Vec::new(),
        target: t,
        meter: BudgetMeter::new(budget),
    };
    if state.next_cycle()? {
        let cycles = std::mem::take(&mut state.cycles);
        let cert = assign_copies(x, m, &cycles);
        Ok(Verdict::Decomposable(Certificate::Hd(cert)))
    } else {
        Ok(Verdict::NotDecomposable(Refutation::Exhausted {
            nodes: state.meter.nodes,
        }))
    }
}

struct State<'a> {
    x: &'a Graph,
    caps: Vec<u32>,
    cycles: Vec<Vec<usize>>,
    target: usize,
    meter: BudgetMeter,
}

impl State<'_> {
    fn next_cycle(&mut self) -> Result<bool> {
        if self.cycles.len() == self.target {
            return Ok(true);
        }
        let remaining = (self.target - self.cycles.len()) as u32;
        // Every vertex still needs 2 capacity units per remaining cycle.
        for v in 0..self.x.order() {
            let slack: u32 = self.x.neighbors(v)
                .iter()
                .map(|&w| self.caps[self.x.edge_index(v, w).unwrap()])
                .sum();
            if slack < 2 * remaining {
                return Ok(false);
            }
        }
        let n = self.x.order();
        let mut path = vec![0usize];
        let mut visited = vec![false; n];
        visited[0] = true;
        self.extend(&mut path, &mut visited)
    }

    /// Grows the current cycle as a path from vertex 0; cycles are produced
    /// in nondecreasing lexicographic order, so each multiset of cycles is
    /// tried once.
    fn extend(&mut self, path: &mut Vec<usize>, visited: &mut Vec<bool>) -> Result<bool> {
        self.meter.tick()?;
        let n = self.x.order();
        let u = *path.last().unwrap();
        if path.len() == n {
            if path[1] < path[n - 1] {
                if let Some(e) = self.usable_edge(u, 0) {
                    self.caps[e] -= 1;
                    self.cycles.push(path.clone());
                    if !self.prev_pair_in_order() {
                        self.cycles.pop();
                        self.caps[e] += 1;
                        return Ok(false);
                    }
                    if self.next_cycle()? {
                        return Ok(true);
                    }
                    self.cycles.pop();
                    self.caps[e] += 1;
                }
            }
            return Ok(false);
        }
        if !self.feasible(path, visited) {
            return Ok(false);
        }
        let neighbors: Vec<usize> = self.x.neighbors(u).to_vec();
        for w in neighbors {
            if visited[w] {
                continue;
            }
            let Some(e) = self.usable_edge(u, w) else {
                continue;
            };
            self.caps[e] -= 1;
            visited[w] = true;
            path.push(w);
            let ok = self.extend(path, visited)?;
            path.pop();
            visited[w] = false;
            self.caps[e] += 1;
            if ok {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn prev_pair_in_order(&self) -> bool {
        let k = self.cycles.len();
        k < 2 || self.cycles[k - 2] <= self.cycles[k - 1]
    }

    fn usable_edge(&self, a: usize, b: usize) -> Option<usize> {
        self.x
            .edge_index(a, b)
            .filter(|&e| self.caps[e] > 0)
    }

    /// Every unvisited vertex needs two usable incident edges; the moving
    /// endpoint and vertex 0 need exits; the unvisited region must hang
    /// together with the moving endpoint.
    fn feasible(&self, path: &[usize], visited: &[bool]) -> bool {
        let n = self.x.order();
        let u = *path.last().unwrap();
        let usable_to = |v: usize, w: usize| self.usable_edge(v, w).is_some();
        for v in 0..n {
            if visited[v] {
                continue;
            }
            // An unvisited vertex can only be entered/left via unvisited
            // neighbors or the two path endpoints.
            let exits = self
                .x
                .neighbors(v)
                .iter()
                .filter(|&&w| usable_to(v, w) && (!visited[w] || w == u || w == 0))
                .count();
            if exits < 2 {
                return false;
            }
        }
        if path.len() > 1
            && !self
                .x
                .neighbors(u)
                .iter()
                .any(|&w| !visited[w] && usable_to(u, w))
        {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![u];
        seen[u] = true;
        while let Some(v) = stack.pop() {
            for &w in self.x.neighbors(v) {
                if !seen[w] && !visited[w] && usable_to(v, w) {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        (0..n).all(|v| visited[v] || seen[v])
    }
}

fn assign_copies(x: &Graph, m: usize, cycles: &[Vec<usize>]) -> HdCertificate {
    let mut next_copy = vec![0usize; x.edge_count()];
    let cycles = cycles
        .iter()
        .map(|cycle| {
            let copies = (0..cycle.len())
                .map(|i| {
                    let e = x
                        .edge_index(cycle[i], cycle[(i + 1) % cycle.len()])
                        .expect("search only uses real edges");
                    let c = next_copy[e];
                    next_copy[e] += 1;
                    c
                })
                .collect();
            ExplicitCycle {
                vertices: cycle.clone(),
                copies,
            }
        })
        .collect();
    HdCertificate {
        m,
        counts: None,
        cycles,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{complete_bipartite, complete_graph, cycle_graph, Catalog};
    use crate::decomp::verify_hd;
    use crate::graph::Multigraph;

    fn decide(x: &Graph, m: usize) -> Verdict {
        let mg = Multigraph::new(x.clone(), m).unwrap();
        direct_hd_search(&mg, &SearchBudget::default()).unwrap()
    }

    fn assert_verified(x: &Graph, m: usize) {
        match decide(x, m) {
            Verdict::Decomposable(Certificate::Hd(cert)) => {
                let mg = Multigraph::new(x.clone(), m).unwrap();
                assert!(verify_hd(&mg, &cert));
            }
            other => panic!("expected decomposable, got {:?}", other),
        }
    }

    #[test]
    fn k5_decomposes() {
        assert_verified(&complete_graph(5), 1);
    }

    #[test]
    fn doubled_k4_decomposes() {
        assert_verified(&complete_graph(4), 2);
    }

    #[test]
    fn doubled_k33_decomposes() {
        assert_verified(&complete_bipartite(3, 3), 2);
    }

    #[test]
    fn doubled_cube_does_not() {
        let catalog = Catalog::builtin();
        let verdict = decide(&catalog.get("F8").unwrap().graph, 2);
        assert!(matches!(
            verdict,
            Verdict::NotDecomposable(Refutation::Exhausted { .. })
        ));
    }

    #[test]
    fn petersen_does_not_even_once() {
        let catalog = Catalog::builtin();
        assert!(!decide(&catalog.get("F10").unwrap().graph, 1).is_decomposable());
    }

    #[test]
    fn cycle_multigraphs() {
        let c5 = cycle_graph(5);
        assert_verified(&c5, 1);
        assert_verified(&c5, 2);
        assert_verified(&c5, 3);
    }
}
