//! Simple graphs, uniform multigraphs, and their arcs.
//!
//! Vertices are dense indices `0..n`. Edges carry stable indices in insertion
//! order; the two arcs of edge `{x, y}` are `(x, y)` and `(y, x)`. All types
//! here are immutable after construction and safe to share across threads.

use crate::error::{Error, Result};

/// An ordered traversal of an edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    pub tail: usize,
    pub head: usize,
}

/// A loopless simple undirected graph.
///
/// Equality compares labeled graphs (order and edge sets), not edge
/// insertion order.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    /// edge_index[x][pos] is the edge index for adjacency[x][pos].
    edge_at: Vec<Vec<usize>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adjacency == other.adjacency
    }
}

impl Eq for Graph {}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl Graph {
    /// Builds a graph from an edge list. Edges are normalized to `(min, max)`
    /// but keep their given order; loops and parallel edges are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut normalized = Vec::with_capacity(edges.len());
        let mut seen = std::collections::HashSet::new();
        for &(x, y) in edges {
            if x == y {
                return Err(Error::InvalidGraph(format!("loop at vertex {}", x)));
            }
            if x >= n || y >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({}, {}) out of range for order {}",
                    x, y, n
                )));
            }
            let e = (x.min(y), x.max(y));
            if !seen.insert(e) {
                return Err(Error::InvalidGraph(format!(
                    "parallel edge {{{}, {}}}",
                    e.0, e.1
                )));
            }
            normalized.push(e);
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(x, y) in &normalized {
            adjacency[x].push(y);
            adjacency[y].push(x);
        }
        let mut edge_at = vec![Vec::new(); n];
        for x in 0..n {
            let mut pairs: Vec<(usize, usize)> = adjacency[x].iter().map(|&y| (y, 0)).collect();
            for p in pairs.iter_mut() {
                p.1 = normalized
                    .iter()
                    .position(|&(a, b)| (a, b) == (x.min(p.0), x.max(p.0)))
                    .unwrap();
            }
            pairs.sort();
            adjacency[x] = pairs.iter().map(|p| p.0).collect();
            edge_at[x] = pairs.iter().map(|p| p.1).collect();
        }
        Ok(Graph {
            n,
            edges: normalized,
            adjacency,
            edge_at,
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        self.adjacency[x].binary_search(&y).is_ok()
    }

    /// Stable index of edge `{x, y}`, if present.
    pub fn edge_index(&self, x: usize, y: usize) -> Option<usize> {
        let pos = self.adjacency[x].binary_search(&y).ok()?;
        Some(self.edge_at[x][pos])
    }

    /// All arcs in sorted (tail, head) order; arc count is twice edge count.
    pub fn arcs(&self) -> Vec<Arc> {
        let mut arcs = Vec::with_capacity(2 * self.edges.len());
        for tail in 0..self.n {
            for &head in &self.adjacency[tail] {
                arcs.push(Arc { tail, head });
            }
        }
        arcs
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Uniform valency, if the graph is regular.
    pub fn regular_valency(&self) -> Option<usize> {
        if self.n == 0 {
            return None;
        }
        let k = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == k).then_some(k)
    }

    /// Proper two-coloring, if one exists.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let mut color = vec![u8::MAX; self.n];
        for start in 0..self.n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &w in &self.adjacency[v] {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        stack.push(w);
                    } else if color[w] == color[v] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    pub fn profile(&self) -> GraphProfile {
        let bipartite_witness = self.two_coloring();
        GraphProfile {
            order: self.n,
            regular_valency: self.regular_valency(),
            bipartite: bipartite_witness.is_some(),
            bipartite_witness,
            connected: self.is_connected(),
        }
    }
}

/// Basic invariants of a graph, computed exactly.
#[derive(Clone, Debug)]
pub struct GraphProfile {
    pub order: usize,
    pub regular_valency: Option<usize>,
    pub bipartite: bool,
    pub bipartite_witness: Option<Vec<u8>>,
    pub connected: bool,
}

/// An edge of a multigraph `mX`: a base edge index plus a copy index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiEdge {
    pub edge: usize,
    pub copy: usize,
}

/// An arc of `mX`: a base arc plus a copy index. The arcs `(x,y)_i` and
/// `(y,x)_i` belong to the edge `{x,y}_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiArc {
    pub tail: usize,
    pub head: usize,
    pub copy: usize,
}

/// The multigraph `mX`: a base graph with every edge taken `m` times.
#[derive(Clone, Debug)]
pub struct Multigraph {
    base: Graph,
    m: usize,
}

impl Multigraph {
    pub fn new(base: Graph, m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::BadMultiplicity);
        }
        Ok(Multigraph { base, m })
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn multiplicity(&self) -> usize {
        self.m
    }

    pub fn order(&self) -> usize {
        self.base.order()
    }

    pub fn edge_count(&self) -> usize {
        self.m * self.base.edge_count()
    }

    pub fn valency(&self, v: usize) -> usize {
        self.m * self.base.degree(v)
    }

    /// All arcs of `mX` in sorted (tail, head, copy) order.
    pub fn arcs(&self) -> Vec<MultiArc> {
        let mut arcs = Vec::with_capacity(2 * self.edge_count());
        for arc in self.base.arcs() {
            for copy in 0..self.m {
                arcs.push(MultiArc {
                    tail: arc.tail,
                    head: arc.head,
                    copy,
                });
            }
        }
        arcs.sort();
        arcs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn rejects_loops_and_parallels() {
        assert!(Graph::from_edges(2, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(2, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(2, &[(0, 2)]).is_err());
    }

    #[test]
    fn degree_sum_equals_twice_edges() {
        let g = k4();
        let total: usize = (0..g.order()).map(|v| g.degree(v)).sum();
        assert_eq!(total, 2 * g.edge_count());
        assert_eq!(g.arcs().len(), 2 * g.edge_count());
    }

    #[test]
    fn edge_index_lookup() {
        let g = k4();
        for (i, &(x, y)) in g.edges().iter().enumerate() {
            assert_eq!(g.edge_index(x, y), Some(i));
            assert_eq!(g.edge_index(y, x), Some(i));
        }
        assert_eq!(
            Graph::from_edges(3, &[(0, 1)]).unwrap().edge_index(0, 2),
            None
        );
    }

    #[test]
    fn profile_single_vertex() {
        let g = Graph::from_edges(1, &[]).unwrap();
        let p = g.profile();
        assert_eq!(p.order, 1);
        assert_eq!(p.regular_valency, Some(0));
        assert!(p.bipartite);
        assert!(p.connected);
    }

    #[test]
    fn profile_k4() {
        let p = k4().profile();
        assert_eq!(p.regular_valency, Some(3));
        assert!(!p.bipartite);
        assert!(p.connected);
    }

    #[test]
    fn multigraph_counts() {
        let mg = Multigraph::new(k4(), 3).unwrap();
        assert_eq!(mg.edge_count(), 18);
        assert_eq!(mg.valency(0), 9);
        assert_eq!(mg.arcs().len(), 36);
        assert!(Multigraph::new(k4(), 0).is_err());
    }
}
