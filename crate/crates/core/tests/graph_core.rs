mod common;

use proptest::prelude::*;
use tdcolor::domination::{all_min_td_sets, gamma_t_exact, is_td_set, private_structure};
use tdcolor::{parse_edge_list, parse_graph6, Graph, VertexSet};

fn graphs(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>()).prop_map(|(n, bits)| common::graph_from_bits(n, bits))
}

fn isolate_free(max_n: usize) -> impl Strategy<Value = Graph> {
    graphs(max_n).prop_filter("isolate-free", |g| g.n() >= 2 && g.is_isolate_free())
}

proptest! {
    #[test]
    fn edge_list_round_trip(g in graphs(12)) {
        prop_assert_eq!(parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn graph6_round_trip(g in graphs(11)) {
        prop_assert_eq!(parse_graph6(&g.to_graph6()).unwrap(), g);
    }

    #[test]
    fn gamma_t_matches_subsets(g in isolate_free(8)) {
        let r = gamma_t_exact(&g).unwrap();
        prop_assert_eq!(r.gamma_t, common::naive_gamma_t(&g));
        prop_assert!(is_td_set(&g, &r.witness));
        prop_assert_eq!(r.witness.len(), r.gamma_t);
    }

    #[test]
    fn min_td_sets_match_subsets(g in isolate_free(8)) {
        let gamma = common::naive_gamma_t(&g);
        let n = g.n();
        let expected: Vec<VertexSet> = (0u64..1 << n)
            .filter(|&d| d.count_ones() as usize == gamma)
            .map(|d| VertexSet::from_mask(n, d))
            .filter(|d| is_td_set(&g, d))
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect();
        let got: Vec<VertexSet> = all_min_td_sets(&g).unwrap().collect();
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn private_neighborhoods_partition_singly_dominated(g in isolate_free(8)) {
        let d = gamma_t_exact(&g).unwrap().witness;
        let ps = private_structure(&g, &d).unwrap();
        for v in g.vertices() {
            let hits: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| d.contains(w)).collect();
            for u in d.iter() {
                prop_assert_eq!(ps.private_of(u).unwrap().contains(v), hits == [u]);
            }
        }
        prop_assert_eq!(ps.d_i.union(&ps.d_r), d.clone());
        prop_assert!(!ps.d_i.intersects(&ps.d_r));
    }
}

#[test]
fn graph6_round_trip_on_every_small_graph() {
    let graphs = common::small_graphs();
    let per_order = [1, 2, 4, 11, 34, 156, 1044];
    for (i, &count) in per_order.iter().enumerate() {
        assert_eq!(graphs.iter().filter(|g| g.n() == i + 1).count(), count);
    }
    let text = std::fs::read_to_string(common::data_dir().join("graphs_upto7.g6")).unwrap();
    for (line, g) in text.lines().zip(&graphs) {
        assert_eq!(g.to_graph6(), line);
        assert_eq!(&parse_graph6(&g.to_graph6()).unwrap(), g);
    }
}
