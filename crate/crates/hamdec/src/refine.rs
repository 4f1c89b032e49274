//! Equitable-partition refinement and the backtracking mapping search used
//! for isomorphism and automorphism discovery.

use std::collections::BTreeMap;

use crate::error::Result;
use crate::graph::Graph;
use crate::BudgetMeter;

/// Paired vertex colorings of two graphs, refined in lockstep so that color
/// classes stay matched between the two sides.
#[derive(Clone)]
pub(crate) struct PairColoring {
    pub cg: Vec<u32>,
    pub ch: Vec<u32>,
    pub num_colors: u32,
}

impl PairColoring {
    fn uniform(n: usize) -> Self {
        PairColoring {
            cg: vec![0; n],
            ch: vec![0; n],
            num_colors: 1,
        }
    }

    /// Refines both colorings until stable. Returns false when the color
    /// class sizes diverge between the two graphs, i.e. no isomorphism is
    /// compatible with the current partition.
    fn refine(&mut self, g: &Graph, h: &Graph) -> bool {
        loop {
            let sig = |graph: &Graph, colors: &[u32], v: usize| {
                let mut nbr: Vec<u32> = graph.neighbors(v).iter().map(|&w| colors[w]).collect();
                nbr.sort_unstable();
                (colors[v], nbr)
            };
            let mut table: BTreeMap<(u32, Vec<u32>), (u32, usize, usize)> = BTreeMap::new();
            let sigs_g: Vec<_> = (0..g.order()).map(|v| sig(g, &self.cg, v)).collect();
            let sigs_h: Vec<_> = (0..h.order()).map(|v| sig(h, &self.ch, v)).collect();
            for s in &sigs_g {
                table.entry(s.clone()).or_insert((0, 0, 0)).1 += 1;
            }
            for s in &sigs_h {
                table.entry(s.clone()).or_insert((0, 0, 0)).2 += 1;
            }
            let mut next = 0u32;
            for entry in table.values_mut() {
                if entry.1 != entry.2 {
                    return false;
                }
                entry.0 = next;
                next += 1;
            }
            if next == self.num_colors {
                return true;
            }
            for (v, s) in sigs_g.iter().enumerate() {
                self.cg[v] = table[s].0;
            }
            for (v, s) in sigs_h.iter().enumerate() {
                self.ch[v] = table[s].0;
            }
            self.num_colors = next;
        }
    }

    /// Assigns a fresh color to `u` in g and `v` in h, then refines.
    fn individualize(&mut self, g: &Graph, h: &Graph, u: usize, v: usize) -> bool {
        if self.cg[u] != self.ch[v] {
            return false;
        }
        self.cg[u] = self.num_colors;
        self.ch[v] = self.num_colors;
        self.num_colors += 1;
        self.refine(g, h)
    }

    /// Smallest non-singleton color class.
    fn target_class(&self) -> Option<u32> {
        let mut counts = vec![0usize; self.num_colors as usize];
        for &c in &self.cg {
            counts[c as usize] += 1;
        }
        counts
            .iter()
            .enumerate()
            .filter(|(_, &cnt)| cnt > 1)
            .min_by_key(|(c, &cnt)| (cnt, *c))
            .map(|(c, _)| c as u32)
    }

    fn class_members(colors: &[u32], color: u32) -> Vec<usize> {
        colors
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == color)
            .map(|(v, _)| v)
            .collect()
    }

    fn discrete_mapping(&self, n: usize) -> Option<Vec<usize>> {
        if self.num_colors as usize != n {
            return None;
        }
        let mut by_color = vec![usize::MAX; n];
        for (v, &c) in self.ch.iter().enumerate() {
            by_color[c as usize] = v;
        }
        Some(self.cg.iter().map(|&c| by_color[c as usize]).collect())
    }
}

fn mapping_is_isomorphism(g: &Graph, h: &Graph, map: &[usize]) -> bool {
    g.edge_count() == h.edge_count()
        && g.edges()
            .iter()
            .all(|&(x, y)| h.has_edge(map[x], map[y]))
}

/// Searches for an isomorphism `g -> h` extending the forced vertex pairs.
/// Complete: returns `None` only when no such isomorphism exists.
pub(crate) fn find_isomorphism(
    g: &Graph,
    h: &Graph,
    forced: &[(usize, usize)],
    meter: &mut BudgetMeter,
) -> Result<Option<Vec<usize>>> {
    let n = g.order();
    if n != h.order() || g.edge_count() != h.edge_count() {
        return Ok(None);
    }
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    let mut state = PairColoring::uniform(n);
    if !state.refine(g, h) {
        return Ok(None);
    }
    for &(u, v) in forced {
        if !state.individualize(g, h, u, v) {
            return Ok(None);
        }
    }
    search(g, h, state, meter)
}

fn search(
    g: &Graph,
    h: &Graph,
    state: PairColoring,
    meter: &mut BudgetMeter,
) -> Result<Option<Vec<usize>>> {
    meter.tick()?;
    let n = g.order();
    match state.target_class() {
        None => {
            if let Some(map) = state.discrete_mapping(n) {
                if mapping_is_isomorphism(g, h, &map) {
                    return Ok(Some(map));
                }
            }
            Ok(None)
        }
        Some(color) => {
            let u = *PairColoring::class_members(&state.cg, color)
                .first()
                .expect("non-empty class");
            for v in PairColoring::class_members(&state.ch, color) {
                let mut child = state.clone();
                if child.individualize(g, h, u, v) {
                    if let Some(map) = search(g, h, child, meter)? {
                        return Ok(Some(map));
                    }
                }
            }
            Ok(None)
        }
    }
}

/// Color class of vertex `v` after initial stable refinement of `g` against
/// itself; candidates for images of `v` under automorphisms extending the
/// identity on `fixed`.
pub(crate) fn automorphism_candidates(
    g: &Graph,
    fixed: &[usize],
    v: usize,
) -> Result<Option<Vec<usize>>> {
    let mut state = PairColoring::uniform(g.order());
    if !state.refine(g, g) {
        return Ok(None);
    }
    for &b in fixed {
        if !state.individualize(g, g, b, b) {
            return Ok(None);
        }
    }
    Ok(Some(PairColoring::class_members(&state.ch, state.cg[v])))
}

/// True when fixing `fixed` pointwise leaves a discrete coloring, i.e. the
/// pointwise stabilizer of `fixed` in Aut(g) is trivial.
pub(crate) fn fixes_everything(g: &Graph, fixed: &[usize]) -> bool {
    let mut state = PairColoring::uniform(g.order());
    if !state.refine(g, g) {
        return false;
    }
    for &b in fixed {
        if !state.individualize(g, g, b, b) {
            return false;
        }
    }
    state.num_colors as usize == g.order()
}
