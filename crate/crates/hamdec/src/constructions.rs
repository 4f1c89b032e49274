//! The derived graphs used throughout: the multigraph `mX`, the arc blow-up
//! `K(mX)`, line graphs, and Cayley graphs from permutation generators.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, MultiArc, Multigraph};
use crate::perm::Permutation;

/// The graph `K(mX)` together with the bidirectional maps between its
/// vertices and the arcs of `mX`, and between its inter-clique edges and the
/// edges of `mX`.
///
/// Vertices are numbered by sorted `(tail, head, copy)` arc order, so the
/// construction is deterministic across runs.
#[derive(Clone, Debug)]
pub struct ExpandedGraph {
    pub graph: Graph,
    pub base: Graph,
    /// K(mX) vertex -> arc of mX.
    pub arc_of_vertex: Vec<MultiArc>,
    /// Base vertex v of X -> the K(mX) vertices forming the clique at v.
    pub clique_of: Vec<Vec<usize>>,
    /// mX edge (base edge index, copy) flattened as `edge * m + copy` ->
    /// the K(mX) edge {(x,y)_i, (y,x)_i} as a vertex pair.
    pub matching_edge_of: Vec<(usize, usize)>,
    vertex_of_arc: HashMap<MultiArc, usize>,
    pub m: usize,
}

impl ExpandedGraph {
    pub fn vertex_of_arc(&self, arc: MultiArc) -> Option<usize> {
        self.vertex_of_arc.get(&arc).copied()
    }

    /// Base vertex whose clique contains the given K(mX) vertex.
    pub fn base_vertex_of(&self, vertex: usize) -> usize {
        self.arc_of_vertex[vertex].tail
    }
}

/// Builds `K(mX)`: one vertex per arc of `mX`, a complete graph on the `km`
/// arcs leaving each vertex of `X`, and a matching edge joining `(x,y)_i`
/// to `(y,x)_i` for each edge `{x,y}_i` of `mX`.
pub fn blow_up(x: &Graph, m: usize) -> Result<ExpandedGraph> {
    if m == 0 {
        return Err(Error::BadMultiplicity);
    }
    if x.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    if x.regular_valency().is_none() {
        return Err(Error::NotRegular);
    }
    let mg = Multigraph::new(x.clone(), m)?;
    let arcs = mg.arcs();
    let vertex_of_arc: HashMap<MultiArc, usize> =
        arcs.iter().enumerate().map(|(i, &a)| (a, i)).collect();

    let mut clique_of = vec![Vec::new(); x.order()];
    for (i, arc) in arcs.iter().enumerate() {
        clique_of[arc.tail].push(i);
    }

    let mut edges = Vec::new();
    for clique in &clique_of {
        for (p, &u) in clique.iter().enumerate() {
            for &v in &clique[p + 1..] {
                edges.push((u, v));
            }
        }
    }
    let mut matching_edge_of = vec![(0, 0); m * x.edge_count()];
    for (e, &(a, b)) in x.edges().iter().enumerate() {
        for copy in 0..m {
            let u = vertex_of_arc[&MultiArc {
                tail: a,
                head: b,
                copy,
            }];
            let v = vertex_of_arc[&MultiArc {
                tail: b,
                head: a,
                copy,
            }];
            matching_edge_of[e * m + copy] = (u, v);
            edges.push((u, v));
        }
    }
    let graph = Graph::from_edges(arcs.len(), &edges)?;
    Ok(ExpandedGraph {
        graph,
        base: x.clone(),
        arc_of_vertex: arcs,
        clique_of,
        matching_edge_of,
        vertex_of_arc,
        m,
    })
}

/// Line graph: vertices are the edges of `x`, adjacent when they share an
/// endpoint.
pub fn line_graph(x: &Graph) -> Graph {
    let mut edges = Vec::new();
    for v in 0..x.order() {
        let incident: Vec<usize> = x
            .neighbors(v)
            .iter()
            .map(|&w| x.edge_index(v, w).unwrap())
            .collect();
        for (p, &e) in incident.iter().enumerate() {
            for &f in &incident[p + 1..] {
                edges.push((e.min(f), e.max(f)));
            }
        }
    }
    edges.sort();
    edges.dedup();
    Graph::from_edges(x.edge_count(), &edges).expect("line graph construction is loop-free")
}

/// Uniform multiplicity wrapper `mX`.
pub fn multigraph(x: &Graph, m: usize) -> Result<Multigraph> {
    Multigraph::new(x.clone(), m)
}

/// A finite group materialized as permutations, with its right regular
/// representation. Elements are enumerated by breadth-first closure from the
/// identity, so indices are deterministic for a fixed generator order.
#[derive(Clone, Debug)]
pub struct RegularRep {
    pub elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
}

impl RegularRep {
    pub fn new(degree: usize, gens: &[Permutation]) -> Result<Self> {
        for g in gens {
            if g.degree() != degree {
                return Err(Error::InvalidPermutation(
                    "generator degree mismatch".into(),
                ));
            }
        }
        let id = Permutation::identity(degree);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::new();
        index.insert(id, 0);
        let mut head = 0;
        while head < elements.len() {
            let e = elements[head].clone();
            head += 1;
            for g in gens {
                let prod = e.then(g);
                if !index.contains_key(&prod) {
                    index.insert(prod.clone(), elements.len());
                    elements.push(prod);
                }
            }
        }
        Ok(RegularRep { elements, index })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// The permutation of element indices given by right multiplication by
    /// `element`.
    pub fn regular_perm(&self, element: &Permutation) -> Result<Permutation> {
        let images: Vec<usize> = self
            .elements
            .iter()
            .map(|e| {
                self.index.get(&e.then(element)).copied().ok_or_else(|| {
                    Error::InvalidPermutation("element outside the generated group".into())
                })
            })
            .collect::<Result<_>>()?;
        Permutation::from_images(images)
    }
}

/// Cayley graph on a group given by permutations of `0..group_order` acting
/// regularly. The element carrying point 0 to `v` is identified with vertex
/// `v`; the connection set must be inverse-closed and identity-free.
pub fn cayley_graph(
    group_order: usize,
    generators: &[Permutation],
    connection: &[Permutation],
) -> Result<Graph> {
    let rep = RegularRep::new(group_order, generators)?;
    if rep.order() != group_order {
        return Err(Error::InvalidPermutation(format!(
            "generators produce a group of order {}, expected {}",
            rep.order(),
            group_order
        )));
    }
    // Regular action: transitive with trivial stabilizers, which for a
    // faithful permutation group of order = degree means every non-identity
    // element is fixed-point-free and point 0 reaches everything.
    let orbit0: std::collections::HashSet<usize> =
        rep.elements.iter().map(|e| e.apply(0)).collect();
    if orbit0.len() != group_order {
        return Err(Error::InvalidPermutation(
            "group action on 0..order is not regular".into(),
        ));
    }
    for s in connection {
        if s.is_identity() {
            return Err(Error::IdentityInConnection);
        }
        if !connection.contains(&s.inverse()) {
            return Err(Error::ConnectionNotInverseClosed);
        }
    }
    // Identify element e with the point e(0); then vertex of e·s is s(e(0)).
    let mut edges = Vec::new();
    for v in 0..group_order {
        for s in connection {
            let w = s.apply(v);
            if v < w {
                edges.push((v, w));
            }
        }
    }
    edges.sort();
    edges.dedup();
    let g = Graph::from_edges(group_order, &edges)?;
    if g.regular_valency() != Some(connection.len()) {
        return Err(Error::InvalidPermutation(
            "connection set does not act freely".into(),
        ));
    }
    Ok(g)
}

/// Builds a Cayley graph from a group acting naturally on few points: the
/// elements are closed under the generators, then everything is moved to
/// the right regular representation.
fn cayley_from_natural(
    degree: usize,
    gens: &[Permutation],
    connection: &[Permutation],
) -> Result<Graph> {
    let rep = RegularRep::new(degree, gens)?;
    let reg_gens: Vec<Permutation> = gens
        .iter()
        .map(|g| rep.regular_perm(g))
        .collect::<Result<_>>()?;
    let reg_conn: Vec<Permutation> = connection
        .iter()
        .map(|s| rep.regular_perm(s))
        .collect::<Result<_>>()?;
    cayley_graph(rep.order(), &reg_gens, &reg_conn)
}

/// `Cay(Sym(4); {(1 2), (2 3 4), (2 4 3)})`, isomorphic to `K(F8)`
/// (0-based cycle notation here).
pub fn cayley_kf8() -> Result<Graph> {
    let s = Permutation::parse_cycles("(0 1)", 4)?;
    let r = Permutation::parse_cycles("(1 2 3)", 4)?;
    cayley_from_natural(4, &[s.clone(), r.clone()], &[s, r.clone(), r.inverse()])
}

/// `Cay(GL(2,3); {A, B, B⁻¹})` with `A` the coordinate swap and `B` the
/// upper transvection, realized on the 9 vectors of `GF(3)²`; isomorphic to
/// `K(F16)`.
pub fn cayley_kf16() -> Result<Graph> {
    let matrix_perm = |m: [[usize; 2]; 2]| {
        let images = (0..9)
            .map(|i| {
                let (x, y) = (i / 3, i % 3);
                3 * ((m[0][0] * x + m[0][1] * y) % 3) + (m[1][0] * x + m[1][1] * y) % 3
            })
            .collect();
        Permutation::from_images(images)
    };
    let a = matrix_perm([[0, 1], [1, 0]])?;
    let b = matrix_perm([[1, 1], [0, 1]])?;
    cayley_from_natural(9, &[a.clone(), b.clone()], &[a, b.clone(), b.inverse()])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{complete_graph, cycle_graph, Catalog};

    #[test]
    fn blow_up_k2_is_k2() {
        let k2 = complete_graph(2);
        let e = blow_up(&k2, 1).unwrap();
        assert_eq!(e.graph.order(), 2);
        assert_eq!(e.graph.edge_count(), 1);
    }

    #[test]
    fn blow_up_orders_and_valencies() {
        let catalog = Catalog::builtin();
        let f10 = catalog.get("F10").unwrap();
        for m in 1..=3 {
            let e = blow_up(&f10.graph, m).unwrap();
            assert_eq!(e.graph.order(), 30 * m);
            assert_eq!(e.graph.regular_valency(), Some(3 * m));
        }
        let f8 = catalog.get("F8").unwrap();
        let e = blow_up(&f8.graph, 2).unwrap();
        assert_eq!(e.graph.order(), 48);
        assert_eq!(e.graph.regular_valency(), Some(6));
    }

    #[test]
    fn blow_up_rejects_irregular_and_empty() {
        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(matches!(blow_up(&path, 1), Err(Error::NotRegular)));
        let empty = Graph::from_edges(2, &[]).unwrap();
        assert!(matches!(blow_up(&empty, 1), Err(Error::NoEdges)));
    }

    #[test]
    fn blow_up_connectivity_matches_base() {
        let two_triangles = Graph::from_edges(
            6,
            &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)],
        )
        .unwrap();
        assert!(!blow_up(&two_triangles, 2).unwrap().graph.is_connected());
        let c5 = cycle_graph(5);
        assert!(blow_up(&c5, 2).unwrap().graph.is_connected());
    }

    #[test]
    fn removing_matching_edges_leaves_cliques() {
        let catalog = Catalog::builtin();
        let f8 = catalog.get("F8").unwrap();
        for m in 1..=2 {
            let e = blow_up(&f8.graph, m).unwrap();
            let km = 3 * m;
            assert_eq!(e.clique_of.len(), 8);
            for clique in &e.clique_of {
                assert_eq!(clique.len(), km);
                for (p, &u) in clique.iter().enumerate() {
                    for &v in &clique[p + 1..] {
                        assert!(e.graph.has_edge(u, v));
                    }
                }
            }
            // The matching edges pair opposite arcs across distinct cliques.
            let mut seen = std::collections::HashSet::new();
            for &(u, v) in &e.matching_edge_of {
                assert_ne!(e.base_vertex_of(u), e.base_vertex_of(v));
                assert!(seen.insert(u));
                assert!(seen.insert(v));
            }
            assert_eq!(seen.len(), e.graph.order());
        }
    }

    #[test]
    fn line_graph_degree_formula() {
        let catalog = Catalog::builtin();
        let lf10 = line_graph(&catalog.get("F10").unwrap().graph);
        assert_eq!(lf10.order(), 15);
        assert_eq!(lf10.regular_valency(), Some(4));
        let lf28 = line_graph(&catalog.get("F28").unwrap().graph);
        assert_eq!(lf28.order(), 42);
        assert_eq!(lf28.regular_valency(), Some(4));
    }

    #[test]
    fn triangle_is_self_line_graph() {
        let k3 = complete_graph(3);
        assert_eq!(line_graph(&k3), k3);
    }

    #[test]
    fn multigraph_wrapper() {
        let catalog = Catalog::builtin();
        let f8 = catalog.get("F8").unwrap();
        let mg = multigraph(&f8.graph, 2).unwrap();
        assert_eq!(mg.edge_count(), 24);
        assert_eq!(mg.valency(0), 6);
    }

    #[test]
    fn cyclic_cayley_graph_is_cycle() {
        let plus = Permutation::parse_cycles("(0 1 2 3 4)", 5).unwrap();
        let minus = plus.inverse();
        let g = cayley_graph(5, &[plus.clone()], &[plus, minus]).unwrap();
        assert_eq!(g, cycle_graph(5));
    }

    #[test]
    fn cayley_rejects_bad_connection() {
        let plus = Permutation::parse_cycles("(0 1 2 3 4)", 5).unwrap();
        let id = Permutation::identity(5);
        assert!(matches!(
            cayley_graph(5, &[plus.clone()], &[id]),
            Err(Error::IdentityInConnection)
        ));
        assert!(matches!(
            cayley_graph(5, &[plus.clone()], &[plus]),
            Err(Error::ConnectionNotInverseClosed)
        ));
    }
}
