mod common;

use common::{brute_lambda_mu, field, prime_powers};
use paley::family::{generalized_paley, paley_graph, peisert_graph};
use paley::graph::{
    are_isomorphic, are_isomorphic_with, common_neighbours, complement, delta_uv, is_self_complementary, srg_params,
    Graph, NotSrg, SearchConfig, SrgParams,
};
use paley::hadamard::jacobsthal_matrix;
use paley::perm::{a_delta_l1, graph_automorphisms, is_arc_transitive, Permutation};
use paley::Error;
use proptest::prelude::*;

fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::from_edges(10, false, &edges).unwrap()
}

#[test]
fn adjacency_is_half_of_q_minus_i_plus_j() {
    for q in prime_powers(5, 101).into_iter().filter(|q| q % 4 == 1) {
        let f = field(q);
        let g = paley_graph(&f).unwrap();
        let qm = jacobsthal_matrix(&f).unwrap();
        let n = q as usize;
        for u in 0..n {
            for v in 0..n {
                let twice = qm.get(u, v) as i64 - (u == v) as i64 + 1;
                assert_eq!(2 * g.has_edge(u, v) as i64, twice, "q={q} ({u}, {v})");
            }
        }
    }
}

#[test]
fn self_complementary_arc_transitive_graphs_have_paley_parameters() {
    for q in [5u64, 9, 13, 17, 25, 29] {
        let f = field(q);
        let g = paley_graph(&f).unwrap();
        assert!(is_self_complementary(&g).unwrap().is_some(), "q={q}");
        assert!(is_arc_transitive(&g, &a_delta_l1(&f).unwrap()).unwrap(), "q={q}");
        let s = srg_params(&g).unwrap();
        let t = (s.v - 1) / 4;
        assert_eq!(s, SrgParams { v: 4 * t + 1, k: 2 * t, lambda: t - 1, mu: t }, "q={q}");
    }
}

#[test]
fn complement_parameters() {
    let graphs = [
        paley_graph(&field(13)).unwrap(),
        paley_graph(&field(25)).unwrap(),
        peisert_graph(&field(9)).unwrap(),
        generalized_paley(&field(9), 4).unwrap().0,
        generalized_paley(&field(16), 5).unwrap().0,
        petersen(),
    ];
    for g in &graphs {
        let s = srg_params(g).unwrap();
        assert!(s.is_feasible());
        let c = complement(g).unwrap();
        assert_eq!(srg_params(&c).unwrap(), s.complement());
        let SrgParams { v, k, lambda, mu } = s;
        assert_eq!(s.complement(), SrgParams { v, k: v - k - 1, lambda: v + mu - 2 - 2 * k, mu: v + lambda - 2 * k });
    }
    assert_eq!(srg_params(&petersen()).unwrap(), SrgParams { v: 10, k: 3, lambda: 0, mu: 1 });
}

#[test]
fn srg_failures_name_the_reason() {
    assert_eq!(srg_params(&Graph::complete(5)), Err(NotSrg::Complete));
    assert_eq!(srg_params(&Graph::empty(0, false)), Err(NotSrg::Empty));
    let two_triangles = Graph::from_edges(6, false, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
    assert_eq!(srg_params(&two_triangles), Err(NotSrg::Disconnected));
    let path = Graph::from_edges(3, false, &[(0, 1), (1, 2)]).unwrap();
    assert!(srg_params(&path).is_err());
    let arc = Graph::from_edges(2, true, &[(0, 1)]).unwrap();
    assert_eq!(srg_params(&arc), Err(NotSrg::Directed));
}

#[test]
fn common_neighbours_and_delta_match_counts() {
    let g = petersen();
    for u in 0..10 {
        for v in 0..10 {
            if u == v {
                continue;
            }
            let common = (0..10).filter(|&w| g.has_edge(u, w) && g.has_edge(v, w)).count();
            assert_eq!(common_neighbours(&g, u, v).unwrap(), common);
            let exactly_one = (0..10).filter(|&w| w != u && w != v && g.has_edge(u, w) != g.has_edge(v, w)).count();
            assert_eq!(delta_uv(&g, u, v).unwrap(), exactly_one);
        }
    }
}

#[test]
fn search_bound_is_enforced() {
    let g = paley_graph(&field(81)).unwrap();
    assert!(matches!(are_isomorphic(&g, &g), Err(Error::ResourceLimit(_))));
    let wide = SearchConfig { max_vertices: 81 };
    let p = are_isomorphic_with(&g, &g, &wide).unwrap().unwrap();
    assert!(g.is_automorphism(&p));
}

#[test]
fn text_formats_round_trip() {
    let g = paley_graph(&field(13)).unwrap();
    assert_eq!(Graph::parse(&g.to_edge_list()).unwrap(), g);
    assert_eq!(Graph::parse(&g.to_matrix()).unwrap(), g);
    let t = paley::family::paley_tournament(&field(11)).unwrap();
    assert_eq!(Graph::parse(&t.to_matrix()).unwrap(), t);
    let dot = g.to_dot();
    assert_eq!(dot.lines().filter(|l| l.contains("--")).count(), g.edge_count());
}

fn random_graph(max: usize) -> impl Strategy<Value = Graph> {
    (1..=max).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * n)
            .prop_map(move |bits| Graph::from_fn(n, false, |u, v| u != v && bits[u.min(v) * n + u.max(v)]).unwrap())
    })
}

fn graph_and_relabelling(max: usize) -> impl Strategy<Value = (Graph, Permutation)> {
    random_graph(max).prop_flat_map(|g| {
        let n = g.vertex_count();
        Just((0..n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(move |images| (g.clone(), Permutation::from_images(images).unwrap()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn srg_params_agree_with_counting(g in random_graph(9)) {
        if let Ok(s) = srg_params(&g) {
            prop_assert_eq!(brute_lambda_mu(&g), Some((s.k, s.lambda, s.mu)));
        }
    }

    #[test]
    fn relabelled_graphs_are_isomorphic((g, p) in graph_and_relabelling(10)) {
        let h = g.relabel(&p).unwrap();
        let m = are_isomorphic(&g, &h).unwrap().expect("relabelling is an isomorphism");
        let n = g.vertex_count();
        for u in 0..n {
            for v in 0..n {
                prop_assert_eq!(g.has_edge(u, v), h.has_edge(m.apply(u), m.apply(v)));
            }
        }
    }

    #[test]
    fn automorphism_order_is_relabelling_invariant((g, p) in graph_and_relabelling(10)) {
        let a = graph_automorphisms(&g).unwrap();
        let b = graph_automorphisms(&g.relabel(&p).unwrap()).unwrap();
        prop_assert_eq!(a.order(), b.order());
        prop_assert!(a.generators().iter().all(|s| g.is_automorphism(s)));
    }

    #[test]
    fn complement_is_an_involution(g in random_graph(10)) {
        let c = complement(&g).unwrap();
        prop_assert_eq!(complement(&c).unwrap(), g.clone());
        prop_assert_eq!(g.edge_count() + c.edge_count(), g.vertex_count() * (g.vertex_count().saturating_sub(1)) / 2);
    }

    #[test]
    fn edge_list_and_matrix_round_trip(g in random_graph(10)) {
        prop_assert_eq!(Graph::parse(&g.to_matrix()).unwrap(), g.clone());
        // an edge list cannot express trailing isolated vertices
        let from_edges = Graph::parse(&g.to_edge_list()).unwrap();
        prop_assert_eq!(from_edges.edges(), g.edges());
    }
}
