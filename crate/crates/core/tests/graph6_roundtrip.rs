//! graph6 codec round-trips, and validation of the shipped fixture corpora.

use gpmyc::graph::Graph;
use gpmyc::graph6::{parse_graph6, to_graph6};
use proptest::prelude::*;
use std::fs;
use std::path::PathBuf;

fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n.saturating_sub(1)) / 2).prop_map(
            move |bits| {
                let mut edges = Vec::new();
                let mut k = 0;
                for v in 1..n {
                    for u in 0..v {
                        if bits[k] {
                            edges.push((u, v));
                        }
                        k += 1;
                    }
                }
                Graph::new(n, &edges).unwrap()
            },
        )
    })
}

proptest! {
    #[test]
    fn encode_then_decode_is_identity(g in arb_graph(30)) {
        let text = to_graph6(&g).unwrap();
        let back = parse_graph6(&text).unwrap();
        prop_assert_eq!(g, back);
    }

    #[test]
    fn decoding_is_injective_on_encodings(a in arb_graph(12), b in arb_graph(12)) {
        let ta = to_graph6(&a).unwrap();
        let tb = to_graph6(&b).unwrap();
        prop_assert_eq!(ta == tb, a == b);
    }
}

/// The shipped corpora hold exactly the standard censuses: all connected
/// graphs per order up to 7, and all connected cubic graphs up to order 10.
/// Every line must parse, re-encode verbatim, and satisfy the census
/// predicate; counts are frozen.
#[test]
fn fixture_corpora_are_complete_and_canonical() {
    let connected_counts = [(1usize, 1usize), (2, 1), (3, 2), (4, 6), (5, 21), (6, 112), (7, 853)];
    for (n, expected) in connected_counts {
        let text = fs::read_to_string(fixture_path(&format!("connected{n}.g6"))).unwrap();
        let mut seen = std::collections::BTreeSet::new();
        let mut count = 0;
        for line in text.lines() {
            let g = parse_graph6(line).unwrap();
            assert_eq!(g.order(), n, "{line}");
            assert!(g.is_connected(), "{line}");
            assert_eq!(to_graph6(&g).unwrap(), line);
            assert!(seen.insert(line.to_string()), "duplicate {line}");
            count += 1;
        }
        assert_eq!(count, expected, "connected{n}.g6");
    }

    let cubic_counts = [(4usize, 1usize), (6, 2), (8, 5), (10, 19)];
    for (n, expected) in cubic_counts {
        let text = fs::read_to_string(fixture_path(&format!("cubic{n}.g6"))).unwrap();
        let mut count = 0;
        for line in text.lines() {
            let g = parse_graph6(line).unwrap();
            assert_eq!(g.order(), n, "{line}");
            assert!(g.is_connected(), "{line}");
            let profile = g.degree_profile();
            assert!(profile.regular && profile.min == 3, "{line} is not cubic");
            assert_eq!(to_graph6(&g).unwrap(), line);
            count += 1;
        }
        assert_eq!(count, expected, "cubic{n}.g6");
    }
}

/// The order-10 cubic corpus contains the Petersen graph: girth 5,
/// distance-regular with diameter 2.
#[test]
fn cubic_corpus_contains_the_petersen_graph() {
    let text = fs::read_to_string(fixture_path("cubic10.g6")).unwrap();
    let petersen = text
        .lines()
        .map(|l| parse_graph6(l).unwrap())
        .find(|g| g.girth() == gpmyc::graph::Girth::Finite(5) && g.distances().max_finite() == 2);
    assert!(petersen.is_some());
}
