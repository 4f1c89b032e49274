//! Cross-checks between independent decision procedures. Each check here
//! could fail only if two separately implemented algorithms disagree, so the
//! suite doubles as a consistency audit of the whole library.

use hamdec::catalog::Catalog;
use hamdec::decomp::{
    counting_obstruction, direct_hd_search, hd_feasibility, p1f_search, verify_hd, Certificate,
    Verdict,
};
use hamdec::graph::Multigraph;
use hamdec::SearchBudget;

fn budget() -> SearchBudget {
    SearchBudget::default()
}

/// A perfect 1-factorisation of a cubic graph is exactly a Hamilton
/// decomposition of its doubled multigraph, so the two searches must agree.
#[test]
fn p1f_matches_doubled_feasibility() {
    for entry in Catalog::builtin().entries() {
        let x = &entry.graph;
        if x.order() > 32 || (0..x.order()).any(|v| x.degree(v) != 3) {
            continue;
        }
        let has_p1f = p1f_search(x, &budget()).unwrap().is_decomposable();
        let doubled = hd_feasibility(x, 2, &budget()).unwrap().is_decomposable();
        assert_eq!(has_p1f, doubled, "{}", entry.name);
    }
}

/// A counting refutation must always be confirmed by the full decision.
#[test]
fn counting_refutation_implies_not_decomposable() {
    for (name, m) in [("F8", 2), ("F8", 6), ("F16", 2), ("F10", 2), ("F28", 2)] {
        let x = Catalog::builtin().get(name).unwrap().graph.clone();
        if counting_obstruction(&x, m, &budget()).unwrap().is_some() {
            assert!(
                !hd_feasibility(&x, m, &budget()).unwrap().is_decomposable(),
                "{} m={}",
                name,
                m
            );
        }
    }
}

/// The structured count-vector search and the direct edge-by-edge search are
/// independent oracles; they must return the same verdict everywhere small.
#[test]
fn oracles_agree_on_small_catalog() {
    for entry in Catalog::builtin().entries() {
        let x = &entry.graph;
        if x.order() > 16 {
            continue;
        }
        for m in 1..=3 {
            let fast = hd_feasibility(x, m, &budget()).unwrap();
            let mg = Multigraph::new(x.clone(), m).unwrap();
            let slow = direct_hd_search(&mg, &budget()).unwrap();
            assert_eq!(
                fast.is_decomposable(),
                slow.is_decomposable(),
                "{} m={}",
                entry.name,
                m
            );
            for verdict in [&fast, &slow] {
                if let Verdict::Decomposable(Certificate::Hd(cert)) = verdict {
                    assert!(verify_hd(&mg, cert), "{} m={}", entry.name, m);
                }
            }
        }
    }
}
