//! The code examples from the chapters in `book/src/`, verbatim. If an API
//! change breaks a snippet, fix it here *and* in the corresponding chapter.
//! (`mdbook test book -L target/<profile>/deps` runs the same snippets
//! straight from the markdown when an mdbook binary is available.)

use hamdec::catalog::{cycle_graph, Catalog};
use hamdec::certificate::CertificateFile;
use hamdec::constructions::blow_up;
use hamdec::decomp::{
    counting_obstruction, hd_feasibility, p1f_search, verify_hd, Certificate, Refutation, Verdict,
};
use hamdec::graph::Multigraph;
use hamdec::graph6::{encode_graph6, parse_graph6};
use hamdec::lift::{contract_hd, lift_hd, walecki_paths};
use hamdec::symmetry::{automorphism_group, is_arc_transitive};

// introduction.md
#[test]
fn intro_petersen() {
    let catalog = Catalog::builtin();
    let petersen = catalog.get("F10").unwrap();
    let verdict = hd_feasibility(&petersen.graph, 1, &Default::default()).unwrap();
    assert!(matches!(verdict, Verdict::NotDecomposable(_)));
}

// graphs-and-catalog.md
#[test]
fn catalog_graph6() {
    let k4 = parse_graph6("C~").unwrap();
    assert_eq!(k4.order(), 4);
    assert_eq!(k4.edge_count(), 6);
    assert_eq!(encode_graph6(&k4), "C~");
}

#[test]
fn catalog_arc_transitivity() {
    let catalog = Catalog::builtin();
    let f14 = catalog.get("F14").unwrap();
    assert!(is_arc_transitive(&f14.graph).unwrap());
    let prism = catalog.get("PRISM3").unwrap();
    assert!(!is_arc_transitive(&prism.graph).unwrap());
}

#[test]
fn catalog_f30_group() {
    let catalog = Catalog::builtin();
    let f30 = catalog.get("F30").unwrap();
    assert_eq!(automorphism_group(&f30.graph).unwrap().order(), 1440);
}

// deciding.md
#[test]
fn deciding_f14() {
    let f14 = Catalog::builtin().get("F14").unwrap().graph.clone();
    let verdict = hd_feasibility(&f14, 2, &Default::default()).unwrap();
    let Verdict::Decomposable(Certificate::Hd(cert)) = verdict else {
        panic!("2·F14 is decomposable");
    };
    assert_eq!(cert.cycles.len(), 3);
    let doubled = Multigraph::new(f14, 2).unwrap();
    assert!(verify_hd(&doubled, &cert));
}

#[test]
fn deciding_counting() {
    let f8 = Catalog::builtin().get("F8").unwrap().graph.clone();
    let refutation = counting_obstruction(&f8, 2, &Default::default())
        .unwrap()
        .expect("2·F8 is blocked");
    let Refutation::CountingObstruction(detail) = refutation else {
        unreachable!()
    };
    assert_eq!(detail.modulus, Some(4));
    assert!(counting_obstruction(&f8, 4, &Default::default())
        .unwrap()
        .is_none());
}

#[test]
fn deciding_p1f() {
    let f16 = Catalog::builtin().get("F16").unwrap().graph.clone();
    let verdict = p1f_search(&f16, &Default::default()).unwrap();
    assert!(matches!(
        verdict,
        Verdict::NotDecomposable(Refutation::KotzigObstruction { .. })
    ));
}

// blow-ups-and-lifting.md
#[test]
fn blow_up_profile() {
    let f8 = Catalog::builtin().get("F8").unwrap().graph.clone();
    let e = blow_up(&f8, 2).unwrap();
    assert_eq!(e.graph.order(), 48);
    assert_eq!(e.graph.regular_valency(), Some(6));
}

#[test]
fn blow_up_walecki() {
    let dec = walecki_paths(6, &[(0, 3), (1, 4), (2, 5)]).unwrap();
    assert_eq!(dec.paths.len(), 3);
    for (path, &(a, b)) in dec.paths.iter().zip(&[(0, 3), (1, 4), (2, 5)]) {
        assert_eq!((path[0], path[5]), (a, b));
    }
}

#[test]
fn blow_up_lift_contract() {
    let c4 = cycle_graph(4);
    let Verdict::Decomposable(Certificate::Hd(cert)) =
        hd_feasibility(&c4, 1, &Default::default()).unwrap()
    else {
        unreachable!()
    };

    let e = blow_up(&c4, 1).unwrap();
    let lifted = lift_hd(&e, &cert).unwrap();
    let cycles: Vec<Vec<usize>> = lifted.cycles.iter().map(|c| c.vertices.clone()).collect();
    let back = contract_hd(&e, &cycles).unwrap();
    assert_eq!(back.cycles.len(), cert.cycles.len());
}

// certificates-and-cli.md
#[test]
fn certificate_round_trip() {
    let x = Catalog::builtin().get("F14").unwrap().graph.clone();
    let verdict = hd_feasibility(&x, 2, &Default::default()).unwrap();
    let file = CertificateFile::from_verdict(Some("F14"), &x, 2, &verdict);
    let json = file.to_json();
    let reloaded = CertificateFile::from_json(&json).unwrap();
    reloaded.verify().unwrap();
}
