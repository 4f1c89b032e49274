//! Randomized invariants via proptest.

use std::collections::BTreeSet;

use proptest::prelude::*;

use hamdec::graph::Graph;
use hamdec::graph6::{encode_graph6, parse_graph6};
use hamdec::lift::walecki_paths;

fn arb_graph() -> impl Strategy<Value = Graph> {
    (2usize..=12).prop_flat_map(|n| {
        let slots = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), slots).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for x in 0..n {
                for y in (x + 1)..n {
                    if bits[k] {
                        edges.push((x, y));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph()) {
        let text = encode_graph6(&g);
        let back = parse_graph6(&text).unwrap();
        prop_assert_eq!(g.order(), back.order());
        let edge_set = |g: &Graph| g.edges().iter().copied().collect::<BTreeSet<_>>();
        prop_assert_eq!(edge_set(&g), edge_set(&back));
        // Encoding is canonical for a fixed labelling.
        prop_assert_eq!(text, encode_graph6(&back));
    }

    #[test]
    fn walecki_prescribed_endpoints(n in 8usize..=12, seed in any::<u64>()) {
        // Derive a pseudo-random endpoint prescription from the seed.
        let mut order: Vec<usize> = (0..n).collect();
        let mut state = seed | 1;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            order.swap(i, (state >> 33) as usize % (i + 1));
        }
        let pairs: Vec<(usize, usize)> =
            (0..n / 2).map(|j| (order[2 * j], order[2 * j + 1])).collect();

        let dec = walecki_paths(n, &pairs).unwrap();
        prop_assert_eq!(dec.paths.len(), n / 2);
        let mut used = BTreeSet::new();
        for (j, path) in dec.paths.iter().enumerate() {
            // Hamilton path with the prescribed endpoints.
            prop_assert_eq!(path.len(), n);
            prop_assert_eq!(path.iter().copied().collect::<BTreeSet<_>>().len(), n);
            prop_assert_eq!((path[0], path[n - 1]), pairs[j]);
            for w in path.windows(2) {
                let e = (w[0].min(w[1]), w[0].max(w[1]));
                prop_assert!(used.insert(e), "edge reused: {:?}", e);
            }
        }
        if n % 2 == 1 {
            // Odd orders leave a near-perfect matching uncovered.
            let leftover = dec.leftover.unwrap();
            prop_assert_eq!(leftover.len(), (n - 1) / 2);
            for (x, y) in leftover {
                let e = (x.min(y), x.max(y));
                prop_assert!(used.insert(e));
            }
        } else {
            prop_assert!(dec.leftover.is_none());
        }
        // Paths plus leftover exhaust the edges of the complete graph.
        prop_assert_eq!(used.len(), n * (n - 1) / 2);
    }
}
