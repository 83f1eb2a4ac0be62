mod common;

use domiperf::enumeration::enumerate_up_to;
use domiperf::invariants::{
    alpha_value, common_independence_number, domination_number, domination_within, independence_number,
    independent_domination_number, max_independent_with, parameter_profile, private_neighborhood,
};
use domiperf::{Graph, Pattern, VertexSet};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn every_labeled_graph_up_to_five_vertices() {
    for n in 1..=5 {
        let m = n * (n - 1) / 2;
        for bits in 0..1u64 << m {
            let g = common::labeled_graph(n, bits);
            let (gamma, ind_dom, alpha) = common::brute_parameters(&g);
            assert_eq!(domination_number(&g).unwrap().0, gamma, "n={n} bits={bits}");
            assert_eq!(independent_domination_number(&g).unwrap().0, ind_dom, "n={n} bits={bits}");
            assert_eq!(independence_number(&g).0, alpha, "n={n} bits={bits}");
            assert_eq!(common_independence_number(&g).unwrap(), common::brute_common_independence(&g));
        }
    }
}

#[test]
fn witnesses_are_lexicographically_smallest() {
    for g in enumerate_up_to(6, None).unwrap() {
        let (_, dom) = domination_number(&g).unwrap();
        let (_, ind_dom) = independent_domination_number(&g).unwrap();
        let (_, ind) = independence_number(&g);
        assert_eq!(common::sorted(dom), common::brute_lex_min(&g, |s| g.is_dominating(s), false));
        assert_eq!(
            common::sorted(ind_dom),
            common::brute_lex_min(&g, |s| common::is_independent_dominating(&g, s), false)
        );
        assert_eq!(common::sorted(ind), common::brute_lex_min(&g, |s| g.is_independent(s), true));
    }
}

#[test]
fn random_graphs_up_to_twelve_vertices() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for round in 0..300 {
        let n = 8 + round % 5;
        let p = [0.2, 0.35, 0.5, 0.7][round % 4];
        let g = common::random_graph(&mut rng, n, p);
        let (gamma, ind_dom, alpha) = common::brute_parameters(&g);
        let prof = parameter_profile(&g).unwrap();
        assert_eq!((prof.gamma, prof.ind_dom, prof.ind), (gamma, ind_dom, alpha));
        assert_eq!(prof.common_ind, common::brute_common_independence(&g));
        assert!(prof.chain_holds());
    }
}

#[test]
fn larger_sparse_and_dense_graphs() {
    // Known values on families beyond brute force.
    let c = |n| Graph::cycle(n).unwrap();
    let p = |n| Graph::path(n).unwrap();
    for n in [20, 31, 40] {
        assert_eq!(domination_number(&c(n)).unwrap().0, n.div_ceil(3));
        assert_eq!(domination_number(&p(n)).unwrap().0, n.div_ceil(3));
        assert_eq!(independence_number(&c(n)).0, n / 2);
        assert_eq!(independence_number(&p(n)).0, n.div_ceil(2));
    }
    let k = Graph::complete(40).unwrap();
    assert_eq!(parameter_profile(&k).unwrap().common_ind, 1);
    let star = Graph::star(30).unwrap();
    let prof = parameter_profile(&star).unwrap();
    assert_eq!((prof.gamma, prof.ind_dom, prof.common_ind, prof.ind), (1, 1, 1, 30));
}

#[test]
fn per_vertex_values_match_alpha_of_the_remainder() {
    for g in enumerate_up_to(6, None).unwrap() {
        for v in 0..g.order() {
            let rest = g.vertices() - g.closed_neighbors(v);
            assert_eq!(max_independent_with(&g, v).unwrap(), 1 + alpha_value(&g, rest));
        }
    }
}

#[test]
fn forbidden_graphs_have_a_gap() {
    for p in Pattern::forbidden() {
        let prof = parameter_profile(p.graph()).unwrap();
        assert!(prof.gamma < prof.common_ind);
        assert!(prof.chain_holds());
    }
}

#[test]
fn mask_restricted_domination_matches_induced_subgraph() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let g = common::random_graph(&mut rng, 9, 0.4);
        let mask = VertexSet::from_bits(rand::Rng::gen_range(&mut rng, 1..1u64 << 9));
        let sub = g.induced_subgraph(mask);
        assert_eq!(domination_within(&g, mask).0, domination_number(&sub).unwrap().0);
    }
}

#[test]
fn private_neighbourhoods_by_definition() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..100 {
        let g = common::random_graph(&mut rng, 8, 0.4);
        let s = VertexSet::from_bits(rand::Rng::gen_range(&mut rng, 1..1u64 << 8));
        for v in s.iter() {
            let others = s.without(v);
            let expected: VertexSet = g
                .closed_neighbors(v)
                .iter()
                .filter(|&u| others.iter().all(|w| !g.closed_neighbors(w).contains(u)))
                .collect();
            assert_eq!(private_neighborhood(&g, v, s).unwrap(), expected);
        }
    }
}

#[test]
fn empty_graph_is_rejected() {
    let g = Graph::empty(0).unwrap();
    assert!(domination_number(&g).is_err());
    assert!(parameter_profile(&g).is_err());
}
