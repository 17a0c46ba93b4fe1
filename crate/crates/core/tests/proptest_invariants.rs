//! Generative invariants over arbitrary small graphs.

use proptest::prelude::*;

use eterdom::bits::iter_set;
use eterdom::certs::{build_cycle_cert, MoveMode, StrategyCertificate};
use eterdom::graph::{orient, triangulation_gadget, SimpleGraph};
use eterdom::io;

fn arb_graph(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
    (2..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .collect();
        let m = pairs.len();
        proptest::bits::u64::masked((1u64 << m) - 1).prop_map(move |mask| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 != 0)
                .map(|(_, &e)| e)
                .collect();
            SimpleGraph::new(n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn orientation_has_one_arc_per_edge_and_flipping_reverses(
        (g, bits) in arb_graph(8).prop_flat_map(|g| {
            let m = g.edge_count();
            let mask = if m == 0 { 0 } else { (1u64 << m) - 1 };
            (Just(g), proptest::bits::u64::masked(mask))
        })
    ) {
        let m = g.edge_count();
        let flags: Vec<bool> = (0..m).map(|i| bits >> i & 1 != 0).collect();
        let d = orient(&g, &flags).unwrap();
        prop_assert_eq!(d.arc_count(), m);
        for &(u, v) in g.edges() {
            prop_assert!(d.arc(u, v) ^ d.arc(v, u));
        }
        let flipped: Vec<bool> = flags.iter().map(|&b| !b).collect();
        let rd = orient(&g, &flipped).unwrap();
        for (u, v) in d.arcs() {
            prop_assert!(rd.arc(v, u) && !rd.arc(u, v));
        }
    }

    #[test]
    fn gadget_counts_and_degrees(g in arb_graph(7)) {
        let c = triangulation_gadget(&g);
        prop_assert_eq!(c.n(), g.n() + g.edge_count());
        prop_assert_eq!(c.edge_count(), 3 * g.edge_count());
        // every added vertex has degree exactly 2, joined to its edge's ends
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            let w = g.n() + e;
            prop_assert_eq!(c.degree(w), 2);
            prop_assert!(c.adjacent(w, u) && c.adjacent(w, v));
        }
    }

    #[test]
    fn edge_list_roundtrip(g in arb_graph(9)) {
        let text = io::write_graph(&g);
        match io::parse(&text).unwrap() {
            io::ParsedGraph::Undirected(h) => prop_assert_eq!(h, g),
            _ => prop_assert!(false),
        }
    }

    #[test]
    fn certificate_json_roundtrip(n in 3usize..=7, multi in any::<bool>()) {
        let mode = if multi { MoveMode::Multimove } else { MoveMode::SingleMove };
        let cert = build_cycle_cert(n, mode).unwrap();
        let back = StrategyCertificate::from_json(&cert.to_json()).unwrap();
        prop_assert_eq!(eterdom::certs::verify_strategy(&back).unwrap(), cert.k);
        prop_assert_eq!(back.configs, cert.configs);
    }

    #[test]
    fn induced_subgraph_preserves_adjacency(
        (g, mask) in arb_graph(8).prop_flat_map(|g| {
            let n = g.n();
            (Just(g), 1u64..(1u64 << n))
        })
    ) {
        let (h, ids) = g.induced(mask);
        prop_assert_eq!(h.n(), mask.count_ones() as usize);
        for (i, &orig_i) in ids.iter().enumerate() {
            for (j, &orig_j) in ids.iter().enumerate().skip(i + 1) {
                prop_assert_eq!(h.adjacent(i, j), g.adjacent(orig_i, orig_j));
            }
        }
        let _ = iter_set(mask).count();
    }
}
