use domiperf::formats::{emit_edge_list, parse_edge_list};
use domiperf::{emit_graph6, parse_graph6, Distance, Graph, VertexSet};
use proptest::prelude::*;

fn graph(max_order: usize) -> impl Strategy<Value = Graph> {
    (0..=max_order).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let all = (1..n).flat_map(|j| (0..j).map(move |i| (i, j)));
            Graph::from_edges(n, all.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in graph(62)) {
        let token = emit_graph6(&g).unwrap();
        prop_assert!(token.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(parse_graph6(&token).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip(g in graph(20)) {
        let text = emit_edge_list(&g);
        let back = parse_edge_list(&text).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn adjacency_is_symmetric_and_loopless(g in graph(40)) {
        for u in 0..g.order() {
            prop_assert!(!g.has_edge(u, u));
            for v in 0..g.order() {
                prop_assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
            }
        }
        prop_assert_eq!(g.degree_sequence().iter().sum::<usize>(), 2 * g.size());
    }

    #[test]
    fn induced_subgraph_keeps_exactly_the_inner_edges(g in graph(16), bits in any::<u64>()) {
        let s = VertexSet::from_bits(bits) & g.vertices();
        let members = s.to_vec();
        let h = g.induced_subgraph(s);
        prop_assert_eq!(h.order(), members.len());
        for (i, &a) in members.iter().enumerate() {
            for (j, &b) in members.iter().enumerate() {
                prop_assert_eq!(h.has_edge(i, j), g.has_edge(a, b));
            }
        }
    }

    #[test]
    fn distance_is_a_metric(g in graph(14)) {
        let n = g.order();
        for u in 0..n {
            prop_assert_eq!(g.distance(u, u), Distance::Finite(0));
            for v in 0..n {
                let duv = g.distance(u, v);
                prop_assert_eq!(duv, g.distance(v, u));
                prop_assert_eq!(duv == Distance::Finite(1), g.has_edge(u, v));
                prop_assert_eq!(duv.finite().is_some(), g.component_of(u).contains(v));
                for w in 0..n {
                    if let (Some(a), Some(b)) = (g.distance(u, w).finite(), g.distance(w, v).finite()) {
                        prop_assert!(duv.finite().unwrap() <= a + b);
                    }
                }
            }
        }
    }

    #[test]
    fn components_partition_the_vertices(g in graph(30)) {
        let comps = g.connected_components();
        let mut seen = VertexSet::EMPTY;
        for c in &comps {
            prop_assert!((seen & *c).is_empty());
            seen |= *c;
            prop_assert!(g.induced_subgraph(*c).is_connected());
        }
        prop_assert_eq!(seen, g.vertices());
    }
}

#[test]
fn malformed_graph6_is_rejected() {
    for bad in ["", "A", "B~", "A_x", "~", "Dzz\u{7f}", "A`"] {
        assert!(parse_graph6(bad).is_err(), "{bad:?}");
    }
}
