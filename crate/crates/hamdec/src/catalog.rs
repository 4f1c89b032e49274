//! Named-graph catalog: the cubic arc-transitive graphs of orders 8..32 in
//! the standard F-notation, the two line graphs used as 4-valent instances,
//! and the triangular prism control graph.
//!
//! Entries are built from explicit constructions (LCF codes where one
//! exists, direct constructions otherwise) and checked against their
//! expected profiles. Catalog files on disk use one `NAME<TAB>graph6` line
//! per entry.

use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::{encode_graph6, parse_graph6};

/// Expected invariants for a catalog entry, enforced at load.
#[derive(Clone, Copy, Debug)]
pub struct ExpectedProfile {
    pub order: usize,
    pub valency: usize,
    pub bipartite: bool,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub graph: Graph,
    pub expected: Option<ExpectedProfile>,
}

#[derive(Clone, Debug)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

/// Cycle on `0..n`.
pub fn cycle_graph(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// Complete graph on `0..n`.
pub fn complete_graph(n: usize) -> Graph {
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            edges.push((i, j));
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Complete bipartite graph with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..a {
        for j in 0..b {
            edges.push((i, a + j));
        }
    }
    Graph::from_edges(a + b, &edges).unwrap()
}

/// Triangular prism: two triangles `0,1,2` and `3,4,5` joined by a matching.
pub fn triangular_prism() -> Graph {
    Graph::from_edges(
        6,
        &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
    )
    .unwrap()
}

/// Cubic Hamiltonian graph from an LCF code: a Hamilton cycle `0..n` plus
/// the chord `i — i + shifts[i mod len]` for each `i`.
pub fn lcf_graph(shifts: &[i64], repeats: usize) -> Graph {
    let n = shifts.len() * repeats;
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    for i in 0..n {
        let shift = shifts[i % shifts.len()];
        let j = ((i as i64 + shift).rem_euclid(n as i64)) as usize;
        let e = (i.min(j), i.max(j));
        if !edges.contains(&e) {
            edges.push(e);
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// The 3-cube: vertices are bit triples, edges join vertices at Hamming
/// distance one. This labeling matches the arc-regular generator data for
/// the rotation group of the cube.
pub fn cube_graph() -> Graph {
    let mut edges = Vec::new();
    for v in 0..8usize {
        for bit in [1, 2, 4] {
            let w = v ^ bit;
            if v < w {
                edges.push((v, w));
            }
        }
    }
    Graph::from_edges(8, &edges).unwrap()
}

/// Petersen graph as the generalized Petersen graph GP(5,2).
pub fn petersen_graph() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::from_edges(10, &edges).unwrap()
}

/// Coxeter graph: seven hubs, each joined to one vertex in each of three
/// 7-rings with chord steps 1, 2, and 3.
pub fn coxeter_graph() -> Graph {
    let mut edges = Vec::new();
    // hubs 0..7, rings a=7..14 (step 1), b=14..21 (step 2), c=21..28 (step 3)
    for i in 0..7 {
        edges.push((7 + i, 7 + (i + 1) % 7));
        edges.push((14 + i, 14 + (i + 2) % 7));
        edges.push((21 + i, 21 + (i + 3) % 7));
        edges.push((i, 7 + i));
        edges.push((i, 14 + i));
        edges.push((i, 21 + i));
    }
    Graph::from_edges(28, &edges).unwrap()
}

fn expected(order: usize, valency: usize, bipartite: bool) -> Option<ExpectedProfile> {
    Some(ExpectedProfile {
        order,
        valency,
        bipartite,
    })
}

impl Catalog {
    /// The embedded catalog, built from explicit constructions.
    pub fn builtin() -> Catalog {
        use crate::constructions::line_graph;
        let f10 = petersen_graph();
        let f28 = coxeter_graph();
        let entries = vec![
            ("F8", cube_graph(), expected(8, 3, true)),
            ("F10", f10.clone(), expected(10, 3, false)),
            ("F14", lcf_graph(&[5, -5], 7), expected(14, 3, true)),
            ("F16", lcf_graph(&[5, -5], 8), expected(16, 3, true)),
            ("F18", lcf_graph(&[5, 7, -7, 7, -7, -5], 3), expected(18, 3, true)),
            (
                "F20A",
                lcf_graph(&[10, 7, 4, -4, -7, 10, -4, 7, -7, 4], 2),
                expected(20, 3, false),
            ),
            ("F20B", lcf_graph(&[5, -5, 9, -9], 5), expected(20, 3, true)),
            ("F24", lcf_graph(&[5, -9, 7, -7, 9, -5], 4), expected(24, 3, true)),
            ("F26", lcf_graph(&[-7, 7], 13), expected(26, 3, true)),
            ("F28", f28.clone(), expected(28, 3, false)),
            ("F30", lcf_graph(&[-13, -9, 7, -7, 9, 13], 5), expected(30, 3, true)),
            ("F32", lcf_graph(&[5, -5, 13, -13], 8), expected(32, 3, true)),
            ("LF10", line_graph(&f10), expected(15, 4, false)),
            ("LF28", line_graph(&f28), expected(42, 4, false)),
            ("PRISM3", triangular_prism(), expected(6, 3, false)),
        ];
        let catalog = Catalog {
            entries: entries
                .into_iter()
                .map(|(name, graph, expected)| CatalogEntry {
                    name: name.to_string(),
                    graph,
                    expected,
                })
                .collect(),
        };
        catalog.check_profiles().expect("builtin catalog profiles");
        catalog
    }

    /// Parses catalog text: one `NAME<TAB>graph6` line per entry; blank
    /// lines and `#` comments are skipped.
    pub fn from_tsv(text: &str) -> Result<Catalog> {
        let mut entries = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (name, g6) = line.split_once('\t').ok_or_else(|| {
                Error::Catalog(format!("line {}: expected NAME<TAB>graph6", lineno + 1))
            })?;
            let graph = parse_graph6(g6.trim())?;
            let expected = Self::builtin_expected(name.trim());
            entries.push(CatalogEntry {
                name: name.trim().to_string(),
                graph,
                expected,
            });
        }
        let catalog = Catalog { entries };
        catalog.check_profiles()?;
        Ok(catalog)
    }

    pub fn load(path: &Path) -> Result<Catalog> {
        let text = std::fs::read_to_string(path)?;
        Self::from_tsv(&text)
    }

    fn builtin_expected(name: &str) -> Option<ExpectedProfile> {
        Catalog::builtin_profiles()
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, p)| *p)
    }

    fn builtin_profiles() -> Vec<(&'static str, ExpectedProfile)> {
        let p = |order, valency, bipartite| ExpectedProfile {
            order,
            valency,
            bipartite,
        };
        vec![
            ("F8", p(8, 3, true)),
            ("F10", p(10, 3, false)),
            ("F14", p(14, 3, true)),
            ("F16", p(16, 3, true)),
            ("F18", p(18, 3, true)),
            ("F20A", p(20, 3, false)),
            ("F20B", p(20, 3, true)),
            ("F24", p(24, 3, true)),
            ("F26", p(26, 3, true)),
            ("F28", p(28, 3, false)),
            ("F30", p(30, 3, true)),
            ("F32", p(32, 3, true)),
            ("LF10", p(15, 4, false)),
            ("LF28", p(42, 4, false)),
            ("PRISM3", p(6, 3, false)),
        ]
    }

    fn check_profiles(&self) -> Result<()> {
        for entry in &self.entries {
            if let Some(exp) = entry.expected {
                let prof = entry.graph.profile();
                if prof.order != exp.order
                    || prof.regular_valency != Some(exp.valency)
                    || prof.bipartite != exp.bipartite
                    || !prof.connected
                {
                    return Err(Error::Catalog(format!(
                        "entry {} does not match its expected profile",
                        entry.name
                    )));
                }
            }
        }
        Ok(())
    }

    /// Checks every F-entry is arc-transitive; the catalog data is trusted
    /// only after this passes.
    pub fn verify_arc_transitive(&self) -> Result<()> {
        for entry in &self.entries {
            if entry.name.starts_with('F') && !crate::symmetry::is_arc_transitive(&entry.graph)? {
                return Err(Error::Catalog(format!(
                    "entry {} is not arc-transitive",
                    entry.name
                )));
            }
        }
        Ok(())
    }

    pub fn get(&self, name: &str) -> Result<&CatalogEntry> {
        self.entries
            .iter()
            .find(|e| e.name == name)
            .ok_or_else(|| Error::UnknownGraph(name.to_string()))
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    /// Cubic arc-transitive entries (the F-names), in catalog order.
    pub fn cubic_at_names(&self) -> Vec<&str> {
        self.entries
            .iter()
            .filter(|e| e.name.starts_with('F'))
            .map(|e| e.name.as_str())
            .collect()
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for entry in &self.entries {
            out.push_str(&entry.name);
            out.push('\t');
            out.push_str(&encode_graph6(&entry.graph));
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_profiles_hold() {
        // Construction doubles as the check: builtin() validates profiles.
        let catalog = Catalog::builtin();
        assert_eq!(catalog.entries().len(), 15);
        assert_eq!(catalog.cubic_at_names().len(), 12);
    }

    #[test]
    fn unknown_name_errors() {
        assert!(Catalog::builtin().get("F99").is_err());
    }

    #[test]
    fn tsv_roundtrip() {
        let catalog = Catalog::builtin();
        let tsv = catalog.to_tsv();
        let reloaded = Catalog::from_tsv(&tsv).unwrap();
        for (a, b) in catalog.entries().iter().zip(reloaded.entries()) {
            assert_eq!(a.name, b.name);
            assert_eq!(a.graph, b.graph);
        }
    }

    #[test]
    fn shipped_catalog_matches_builtin() {
        let shipped = Catalog::from_tsv(include_str!("../data/catalog.tsv")).unwrap();
        let builtin = Catalog::builtin();
        assert_eq!(shipped.entries().len(), builtin.entries().len());
        for (a, b) in shipped.entries().iter().zip(builtin.entries()) {
            assert_eq!(a.name, b.name);
            assert_eq!(a.graph, b.graph, "catalog entry {}", a.name);
        }
    }

    /// Golden-file refresh: `cargo test -p hamdec regenerate_shipped_catalog
    /// -- --ignored` rewrites data/catalog.tsv from the builtin catalog.
    #[test]
    #[ignore]
    fn regenerate_shipped_catalog() {
        let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/catalog.tsv");
        std::fs::write(path, Catalog::builtin().to_tsv()).unwrap();
    }

    #[test]
    fn bad_tsv_lines_rejected() {
        assert!(Catalog::from_tsv("F8 no-tab-here").is_err());
        assert!(Catalog::from_tsv("F8\t!!notgraph6").is_err());
    }
}
