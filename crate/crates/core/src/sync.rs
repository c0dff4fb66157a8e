//! Synchronous amnesiac flooding.
//!
//! Round 1 is the source's initial send. In every later round each node that
//! received the message in the previous round forwards it to every neighbour
//! that did not send it the message in that round.

use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;

use fixedbitset::FixedBitSet;

use crate::graph::{Graph, NodeId};
use crate::{Error, Result};

/// The directed transmissions of one round, as a set of arc ids of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Configuration {
    arcs: FixedBitSet,
}

impl Configuration {
    pub fn empty(g: &Graph) -> Self {
        Configuration { arcs: FixedBitSet::with_capacity(g.arc_count()) }
    }

    /// The source's round-1 send to each of its neighbours.
    pub fn initial(g: &Graph, source: NodeId) -> Result<Self> {
        g.check_node(source)?;
        let mut c = Self::empty(g);
        for arc in g.arcs_from(source) {
            c.arcs.insert(arc);
        }
        Ok(c)
    }

    pub fn from_pairs<I>(g: &Graph, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (NodeId, NodeId)>,
    {
        let mut c = Self::empty(g);
        for (from, to) in pairs {
            let arc = g.arc_id(from, to).ok_or(Error::NotAnEdge { from, to })?;
            c.arcs.insert(arc);
        }
        Ok(c)
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_clear()
    }

    pub fn len(&self) -> usize {
        self.arcs.count_ones(..)
    }

    pub fn contains_arc(&self, arc: usize) -> bool {
        self.arcs.contains(arc)
    }

    pub fn contains(&self, g: &Graph, from: NodeId, to: NodeId) -> bool {
        g.arc_id(from, to).is_some_and(|arc| self.arcs.contains(arc))
    }

    pub fn arcs(&self) -> impl Iterator<Item = usize> + '_ {
        self.arcs.ones()
    }

    /// `(from, to)` pairs in lexicographic order.
    pub fn pairs(&self, g: &Graph) -> Vec<(NodeId, NodeId)> {
        // Arc ids are laid out by source, then target, so id order is
        // already lexicographic.
        self.arcs.ones().map(|arc| g.arc(arc)).collect()
    }

    /// Nodes receiving at least one transmission, in id order.
    pub fn receivers(&self, g: &Graph) -> Vec<NodeId> {
        let mut hit = vec![false; g.node_count()];
        for arc in self.arcs.ones() {
            hit[g.arc(arc).1] = true;
        }
        (0..g.node_count()).filter(|&v| hit[v]).collect()
    }

    fn check(&self, g: &Graph) -> Result<()> {
        if self.arcs.len() == g.arc_count() {
            Ok(())
        } else {
            Err(Error::ConfigurationMismatch { expected: g.arc_count(), found: self.arcs.len() })
        }
    }
}

/// One flooding step: every receiver forwards to each neighbour it did not
/// hear from in `c`.
pub fn step(g: &Graph, c: &Configuration) -> Result<Configuration> {
    c.check(g)?;
    let mut next = Configuration::empty(g);
    for v in c.receivers(g) {
        for arc in g.arcs_from(v) {
            if !c.arcs.contains(g.reverse_arc(arc)) {
                next.arcs.insert(arc);
            }
        }
    }
    Ok(next)
}

/// A complete synchronous run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trace {
    pub source: NodeId,
    pub node_count: usize,
    /// `rounds[i]` holds the transmissions of round `i + 1`.
    pub rounds: Vec<Configuration>,
    /// `round_sets[i]` is the set of nodes receiving in round `i`; entry 0 is
    /// the source alone.
    pub round_sets: Vec<Vec<NodeId>>,
    /// Index of the last non-empty round-set.
    pub termination_round: usize,
}

impl Trace {
    /// Round indices at which `v` received the message, ascending. The source
    /// counts as receiving in round 0.
    pub fn occurrences(&self, v: NodeId) -> Vec<usize> {
        self.round_sets
            .iter()
            .enumerate()
            .filter(|(_, set)| set.binary_search(&v).is_ok())
            .map(|(i, _)| i)
            .collect()
    }

    /// Occurrence lists for every node.
    pub fn all_occurrences(&self) -> Vec<Vec<usize>> {
        let mut occ = vec![Vec::new(); self.node_count];
        for (i, set) in self.round_sets.iter().enumerate() {
            for &v in set {
                occ[v].push(i);
            }
        }
        occ
    }

    pub fn round_set(&self, i: usize) -> &[NodeId] {
        self.round_sets.get(i).map_or(&[], Vec::as_slice)
    }

    pub fn total_sends(&self) -> usize {
        self.rounds.iter().map(Configuration::len).sum()
    }
}

/// Number of distinct round-sets containing each node.
pub fn round_multiplicity(t: &Trace) -> Vec<usize> {
    let mut counts = vec![0; t.node_count];
    for set in &t.round_sets {
        for &v in set {
            counts[v] += 1;
        }
    }
    counts
}

/// Round budget one past the `2n + 1` termination bound, so that a violation
/// shows up instead of being cut off.
pub fn default_max_rounds(node_count: usize) -> usize {
    2 * node_count + 2
}

/// Floods `g` from `source` until no transmission is in flight.
///
/// Fails on disconnected graphs, and treats running out of `max_rounds`,
/// ending at or after round `2n + 1`, or any node landing in three round-sets
/// as internal invariant failures carrying the trace.
pub fn run_sync(g: &Graph, source: NodeId, max_rounds: usize) -> Result<Trace> {
    g.check_node(source)?;
    g.require_connected()?;
    let mut trace = Trace {
        source,
        node_count: g.node_count(),
        rounds: Vec::new(),
        round_sets: vec![vec![source]],
        termination_round: 0,
    };
    let mut config = Configuration::initial(g, source)?;
    while !config.is_empty() {
        if trace.rounds.len() == max_rounds {
            trace.termination_round = trace.round_sets.len() - 1;
            return Err(Error::NonTermination { max_rounds, trace: Box::new(trace) });
        }
        let next = step(g, &config)?;
        trace.round_sets.push(config.receivers(g));
        trace.rounds.push(config);
        config = next;
    }
    trace.termination_round = trace.round_sets.len() - 1;

    let bound = 2 * g.node_count() + 1;
    if trace.termination_round >= bound {
        return Err(Error::TerminationBoundExceeded {
            round: trace.termination_round,
            bound,
            trace: Box::new(trace),
        });
    }
    if let Some((node, &count)) = round_multiplicity(&trace).iter().enumerate().find(|(_, &c)| c > 2) {
        return Err(Error::MultiplicityExceeded { node, count, trace: Box::new(trace) });
    }
    Ok(trace)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::NamedGraph;

    fn named(kind: NamedGraph) -> Graph {
        Graph::named(kind).unwrap()
    }

    fn run(g: &Graph, s: NodeId) -> Trace {
        run_sync(g, s, default_max_rounds(g.node_count())).unwrap()
    }

    // triangle and path use a=0, b=1, c=2, d=3
    #[test]
    fn triangle_exchange() {
        let g = named(NamedGraph::Cycle(3));
        let c = Configuration::from_pairs(&g, [(1, 0), (1, 2)]).unwrap();
        let next = step(&g, &c).unwrap();
        assert_eq!(next.pairs(&g), vec![(0, 2), (2, 0)]);
    }

    #[test]
    fn path_step_reaches_far_side_only() {
        let g = named(NamedGraph::Path(4));
        let c = Configuration::from_pairs(&g, [(1, 0), (1, 2)]).unwrap();
        assert_eq!(step(&g, &c).unwrap().pairs(&g), vec![(2, 3)]);
    }

    #[test]
    fn empty_is_absorbing() {
        for g in [named(NamedGraph::Petersen), named(NamedGraph::Path(2))] {
            let c = Configuration::empty(&g);
            assert!(step(&g, &c).unwrap().is_empty());
        }
    }

    #[test]
    fn rejects_foreign_pairs_and_configurations() {
        let g = named(NamedGraph::Path(4));
        assert!(matches!(
            Configuration::from_pairs(&g, [(0, 2)]),
            Err(Error::NotAnEdge { from: 0, to: 2 })
        ));
        let other = Configuration::empty(&named(NamedGraph::Petersen));
        assert!(matches!(step(&g, &other), Err(Error::ConfigurationMismatch { .. })));
    }

    #[test]
    fn termination_rounds_of_small_families() {
        let cube = named(NamedGraph::Hypercube(3));
        for s in 0..8 {
            assert_eq!(run(&cube, s).termination_round, 3);
        }
        let petersen = named(NamedGraph::Petersen);
        for s in 0..10 {
            assert_eq!(run(&petersen, s).termination_round, 5);
        }
        assert_eq!(run(&named(NamedGraph::Path(4)), 1).termination_round, 2);
        assert_eq!(run(&named(NamedGraph::Cycle(5)), 1).termination_round, 5);
        assert_eq!(run(&named(NamedGraph::Cycle(6)), 1).termination_round, 3);
    }

    #[test]
    fn triangle_returns_to_source() {
        let g = named(NamedGraph::Cycle(3));
        let t = run(&g, 1);
        assert_eq!(t.termination_round, 3);
        assert_eq!(t.round_sets, vec![vec![1], vec![0, 2], vec![0, 2], vec![1]]);
        assert_eq!(round_multiplicity(&t), vec![2, 2, 2]);
        assert_eq!(t.total_sends(), 6);
    }

    #[test]
    fn multiplicities() {
        let c6 = named(NamedGraph::Cycle(6));
        for s in 0..6 {
            assert!(round_multiplicity(&run(&c6, s)).iter().all(|&c| c == 1));
        }
        let petersen = named(NamedGraph::Petersen);
        for s in 0..10 {
            assert!(round_multiplicity(&run(&petersen, s)).contains(&2));
        }
    }

    #[test]
    fn single_node_terminates_immediately() {
        let g = Graph::new(1, []).unwrap();
        let t = run(&g, 0);
        assert_eq!((t.termination_round, t.rounds.len()), (0, 0));
    }

    #[test]
    fn errors() {
        let g = named(NamedGraph::Petersen);
        assert!(matches!(run_sync(&g, 0, 3), Err(Error::NonTermination { max_rounds: 3, .. })));
        assert!(matches!(run_sync(&g, 10, 30), Err(Error::NodeOutOfRange { .. })));
        let split = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(run_sync(&split, 0, 10), Err(Error::Disconnected)));
    }

    #[test]
    fn budget_equal_to_termination_round_is_enough() {
        let g = named(NamedGraph::Petersen);
        assert_eq!(run_sync(&g, 0, 5).unwrap().termination_round, 5);
    }
}
