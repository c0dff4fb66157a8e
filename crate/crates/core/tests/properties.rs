//! Termination invariants on random connected graphs.

use amnesiac_core::analysis::{audit_lemmas, classify};
use amnesiac_core::asynchronous::{run_async, ZeroDelayAdversary};
use amnesiac_core::graph::{diameter, distance_profile, ec_nodes, is_bipartite, Bipartiteness, Graph};
use amnesiac_core::sync::{default_max_rounds, round_multiplicity, run_sync};
use proptest::prelude::*;

fn connected_graph() -> impl Strategy<Value = Graph> {
    (2usize..=14, 0.1f64..0.7, any::<u64>())
        .prop_map(|(n, p, seed)| Graph::random(n, p, seed).unwrap())
        .prop_filter("connected", Graph::is_connected)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn termination_and_multiplicity(g in connected_graph(), pick in any::<prop::sample::Index>()) {
        let n = g.node_count();
        let source = pick.index(n);
        let t = run_sync(&g, source, default_max_rounds(n)).unwrap();
        prop_assert!(t.termination_round < 2 * n + 1);
        prop_assert!(round_multiplicity(&t).iter().all(|&c| (1..=2).contains(&c)));
        prop_assert_eq!(&t, &run_sync(&g, source, default_max_rounds(n)).unwrap());
    }

    #[test]
    fn classification_and_audit(g in connected_graph(), pick in any::<prop::sample::Index>()) {
        let source = pick.index(g.node_count());
        let report = classify(&g, source).unwrap();
        prop_assert!(report.window_ok, "{:?}", report);
        prop_assert_eq!(report.bipartite, report.termination_round == report.eccentricity);
        let t = run_sync(&g, source, default_max_rounds(g.node_count())).unwrap();
        let audit = audit_lemmas(&g, source, &t).unwrap();
        prop_assert!(audit.all_passed(), "{:?}", audit.first_failure());
    }

    #[test]
    fn static_oracles_agree(g in connected_graph()) {
        let bipartite = is_bipartite(&g);
        let mut max_ecc = 0;
        for s in 0..g.node_count() {
            let profile = distance_profile(&g, s).unwrap();
            prop_assert_eq!(profile.layers.len(), profile.eccentricity + 1);
            prop_assert_eq!(profile.layers.iter().map(Vec::len).sum::<usize>(), g.node_count());
            prop_assert_eq!(profile.layer(0), &[s][..]);
            max_ecc = max_ecc.max(profile.eccentricity);
            let report = ec_nodes(&g, s).unwrap();
            prop_assert_eq!(report.ec_nodes.is_empty(), report.witness_edges.is_empty());
            prop_assert_eq!(report.ec_nodes.is_empty(), bipartite.is_bipartite());
        }
        prop_assert_eq!(diameter(&g).unwrap(), max_ecc);
        match bipartite {
            Bipartiteness::Bipartite { coloring } => {
                for &(u, v) in g.edges() {
                    prop_assert_ne!(coloring[u], coloring[v]);
                }
            }
            Bipartiteness::NotBipartite { odd_cycle } => {
                prop_assert_eq!(odd_cycle.len() % 2, 1);
                for i in 0..odd_cycle.len() {
                    prop_assert!(g.has_edge(odd_cycle[i], odd_cycle[(i + 1) % odd_cycle.len()]));
                }
            }
        }
    }

    #[test]
    fn zero_delay_is_synchronous(g in connected_graph(), pick in any::<prop::sample::Index>()) {
        let source = pick.index(g.node_count());
        let v = run_async(&g, source, &mut ZeroDelayAdversary, 64, 1).unwrap();
        let t = run_sync(&g, source, default_max_rounds(g.node_count())).unwrap();
        prop_assert_eq!(v.to_sync_trace(&g), Some(t));
    }
}
