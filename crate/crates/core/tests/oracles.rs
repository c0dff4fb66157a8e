//! Cross-checks of the engines against independent oracles: exhaustive
//! schedule exploration, closed-form enumeration counts, and symmetry.

use std::collections::{BTreeMap, BTreeSet};

use amnesiac_core::analysis::{enumerate, sweep};
use amnesiac_core::asynchronous::{advance, AdversaryDecision, AsyncConfiguration};
use amnesiac_core::graph::{Graph, NamedGraph, NodeId};
use amnesiac_core::sync::{default_max_rounds, run_sync, Trace};

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Connected labeled graphs on `n` nodes via the standard recurrence
/// C(n) = 2^C(n,2) - sum_{k=1}^{n-1} C(n-1,k-1) C(k) 2^C(n-k,2).
fn connected_labeled(n_max: u64) -> Vec<u64> {
    let mut c = vec![0u64; n_max as usize + 1];
    for n in 1..=n_max {
        let all = 1u64 << binomial(n, 2);
        let disconnected: u64 = (1..n)
            .map(|k| binomial(n - 1, k - 1) * c[k as usize] * (1u64 << binomial(n - k, 2)))
            .sum();
        c[n as usize] = all - disconnected;
    }
    c
}

#[test]
fn enumeration_counts_match_recurrence() {
    let c = connected_labeled(6);
    assert_eq!(&c[1..], &[1, 1, 4, 38, 728, 26704]);
    for (n, &expected) in c.iter().enumerate().skip(1) {
        let found = enumerate::connected_graphs(n, 0..enumerate::mask_count(n)).count() as u64;
        assert_eq!(found, expected, "n = {n}");
    }
    let s = sweep(4).unwrap();
    let graphs: u64 = c[1..=4].iter().sum();
    let runs: u64 = (1..=4).map(|n| n as u64 * c[n]).sum();
    assert_eq!((s.graphs, s.runs), (graphs, runs));
    assert!(s.is_clean());
}

/// All configurations reachable under every fair schedule, as an explicit
/// transition graph.
fn reachable(g: &Graph, source: NodeId, hold_cap: u32) -> BTreeMap<AsyncConfiguration, BTreeSet<AsyncConfiguration>> {
    let mut edges = BTreeMap::new();
    let mut stack = vec![AsyncConfiguration::initial(g, source).unwrap()];
    while let Some(config) = stack.pop() {
        if edges.contains_key(&config) {
            continue;
        }
        if config.is_empty() {
            // Absorbing; flooding is over.
            edges.insert(config, BTreeSet::new());
            continue;
        }
        let holdable: Vec<_> = config
            .messages()
            .filter(|&(_, _, age)| age < hold_cap)
            .map(|(f, t, _)| (f, t))
            .collect();
        let mut successors = BTreeSet::new();
        for subset in 0u32..1 << holdable.len() {
            let mut decision = AdversaryDecision::deliver_all();
            for (i, &(f, t)) in holdable.iter().enumerate() {
                if subset >> i & 1 == 1 {
                    decision = decision.hold(f, t);
                }
            }
            let next = advance(g, &config, &decision, hold_cap).unwrap().next;
            if next != config {
                stack.push(next.clone());
            }
            successors.insert(next);
        }
        edges.insert(config, successors);
    }
    edges
}

fn has_cycle(edges: &BTreeMap<AsyncConfiguration, BTreeSet<AsyncConfiguration>>) -> bool {
    // Kahn's algorithm on the reachable configuration graph.
    let mut indegree: BTreeMap<&AsyncConfiguration, usize> = edges.keys().map(|k| (k, 0)).collect();
    for succ in edges.values() {
        for s in succ {
            *indegree.get_mut(s).unwrap() += 1;
        }
    }
    let mut ready: Vec<_> = indegree.iter().filter(|(_, &d)| d == 0).map(|(&k, _)| k).collect();
    let mut removed = 0;
    while let Some(k) = ready.pop() {
        removed += 1;
        for s in &edges[k] {
            let d = indegree.get_mut(s).unwrap();
            *d -= 1;
            if *d == 0 {
                ready.push(s);
            }
        }
    }
    removed != edges.len()
}

#[test]
fn every_fair_schedule_terminates_on_the_path() {
    let g = Graph::named(NamedGraph::Path(4)).unwrap();
    let space = reachable(&g, 1, 1);
    assert!(space.len() > 5);
    assert!(!has_cycle(&space));
    assert!(space.contains_key(&AsyncConfiguration::default()));
    // Every schedule ends in the empty configuration.
    assert!(space.iter().all(|(k, succ)| k.is_empty() || !succ.is_empty()));
}

#[test]
fn some_fair_schedule_cycles_on_the_triangle() {
    let g = Graph::named(NamedGraph::Cycle(3)).unwrap();
    assert!(has_cycle(&reachable(&g, 1, 1)));
}

fn permuted_rounds(g: &Graph, t: &Trace, perm: &[NodeId]) -> Vec<BTreeSet<(NodeId, NodeId)>> {
    t.rounds
        .iter()
        .map(|c| c.pairs(g).into_iter().map(|(u, v)| (perm[u], perm[v])).collect())
        .collect()
}

fn assert_equivariant(g: &Graph, source: NodeId, perm: &[NodeId]) {
    assert_eq!(perm[source], source);
    for &(u, v) in g.edges() {
        assert!(g.has_edge(perm[u], perm[v]), "not an automorphism");
    }
    let t = run_sync(g, source, default_max_rounds(g.node_count())).unwrap();
    let original: Vec<BTreeSet<_>> = t.rounds.iter().map(|c| c.pairs(g).into_iter().collect()).collect();
    assert_eq!(permuted_rounds(g, &t, perm), original);
}

#[test]
fn traces_are_equivariant_under_automorphisms_fixing_the_source() {
    let c7 = Graph::named(NamedGraph::Cycle(7)).unwrap();
    let reflect: Vec<_> = (0..7).map(|i| (7 - i) % 7).collect();
    assert_equivariant(&c7, 0, &reflect);

    let petersen = Graph::named(NamedGraph::Petersen).unwrap();
    let reflect: Vec<_> = (0..10).map(|i| if i < 5 { (5 - i) % 5 } else { 5 + (5 - (i - 5)) % 5 }).collect();
    assert_equivariant(&petersen, 0, &reflect);

    let cube = Graph::named(NamedGraph::Hypercube(4)).unwrap();
    // Swap coordinates 0 and 2.
    let swap: Vec<_> = (0..16usize)
        .map(|v| {
            let (b0, b2) = (v & 1, v >> 2 & 1);
            (v & !0b101) | b2 | b0 << 2
        })
        .collect();
    assert_equivariant(&cube, 0, &swap);
}
