mod common;

use proptest::prelude::*;
use tdcolor::coloring::{analyze, extract_td_set, first_violation, is_td_coloring, ColoringKind};
use tdcolor::domination::{gamma_t_exact, is_td_set};
use tdcolor::exact::{chi_exact, chi_td_exact, feasible_td_coloring};
use tdcolor::{Coloring, Graph};

fn isolate_free(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n, any::<u64>())
        .prop_map(|(n, bits)| common::graph_from_bits(n, bits))
        .prop_filter("isolate-free", Graph::is_isolate_free)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn chi_td_matches_partitions(g in isolate_free(7)) {
        let r = chi_td_exact(&g).unwrap();
        prop_assert_eq!(r.value, common::naive_chi_td(&g));
        prop_assert!(common::naive_is_td(&g, r.witness.colors()));
        prop_assert_eq!(chi_exact(&g).unwrap().value, common::naive_chi(&g));
    }

    #[test]
    fn sandwich(g in isolate_free(9)) {
        let gamma_t = gamma_t_exact(&g).unwrap().gamma_t;
        let chi = chi_exact(&g).unwrap().value;
        let chi_td = chi_td_exact(&g).unwrap().value;
        prop_assert!(gamma_t.max(chi) <= chi_td && chi_td <= gamma_t + chi);
    }

    #[test]
    fn feasibility_is_monotone(g in isolate_free(7)) {
        let chi_td = chi_td_exact(&g).unwrap().value;
        prop_assert!(feasible_td_coloring(&g, chi_td - 1).unwrap().is_none());
        let c = feasible_td_coloring(&g, chi_td).unwrap().unwrap();
        prop_assert!(is_td_coloring(&g, &c));
    }

    #[test]
    fn validator_matches_definition(g in isolate_free(7), labels in prop::collection::vec(1usize..5, 7)) {
        let c = Coloring::from_labels(&labels[..g.n()]);
        prop_assert_eq!(is_td_coloring(&g, &c), common::naive_is_td(&g, c.colors()));
        prop_assert_eq!(first_violation(&g, &c, ColoringKind::Td).is_none(), is_td_coloring(&g, &c));
    }

    #[test]
    fn analysis_of_optimal_colorings(g in isolate_free(8)) {
        let c = chi_td_exact(&g).unwrap().witness;
        let a = analyze(&g, &c).unwrap();
        let mut all: Vec<usize> = a.c_p.iter().chain(&a.c_s).chain(&a.c_g).copied().collect();
        all.sort_unstable();
        prop_assert_eq!(all, (1..=c.num_colors()).collect::<Vec<_>>());
        prop_assert!(a.c_0.iter().all(|id| !a.c_g.contains(id)));
        prop_assert!(is_td_set(&g, &a.d_0));
        let d = extract_td_set(&g, &c).unwrap();
        prop_assert!(is_td_set(&g, &d));
        prop_assert_eq!(d.len(), c.num_colors());
    }
}
