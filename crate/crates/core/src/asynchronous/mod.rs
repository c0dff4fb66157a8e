//! Round-asynchronous amnesiac flooding.
//!
//! Rounds stay global, but an adversary decides for every in-flight message
//! whether it is delivered this round or held for later. Messages delivered
//! in the same round are merged into one inbox per receiver before it
//! responds, exactly as in the synchronous rule. A held message must be
//! delivered once its age reaches the hold cap.
//!
//! When the adversary is a pure function of the configuration, the next
//! configuration is a pure function of the current one, so seeing the same
//! round-start configuration twice proves the run never terminates.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Graph, NodeId};
use crate::sync::{Configuration, Trace};
use crate::{Error, Result};

mod adversary;

pub use adversary::{triangle_hold_adversary, RandomHoldAdversary, TriangleHoldAdversary, ZeroDelayAdversary};

/// Rounds a message has been held.
pub type Age = u32;

/// Messages sent but not yet delivered, keyed by arc. Copies of the single
/// token on the same arc are indistinguishable and kept as one entry.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AsyncConfiguration {
    in_flight: BTreeMap<(NodeId, NodeId), Age>,
}

impl AsyncConfiguration {
    pub fn initial(g: &Graph, source: NodeId) -> Result<Self> {
        g.check_node(source)?;
        Ok(AsyncConfiguration {
            in_flight: g.neighbors(source).iter().map(|&w| ((source, w), 0)).collect(),
        })
    }

    pub fn from_messages<I>(g: &Graph, messages: I) -> Result<Self>
    where
        I: IntoIterator<Item = (NodeId, NodeId, Age)>,
    {
        let mut config = AsyncConfiguration::default();
        for (from, to, age) in messages {
            if !g.has_edge(from, to) {
                return Err(Error::NotAnEdge { from, to });
            }
            config.insert(from, to, age);
        }
        Ok(config)
    }

    fn insert(&mut self, from: NodeId, to: NodeId, age: Age) {
        let slot = self.in_flight.entry((from, to)).or_insert(age);
        *slot = (*slot).max(age);
    }

    pub fn is_empty(&self) -> bool {
        self.in_flight.is_empty()
    }

    pub fn len(&self) -> usize {
        self.in_flight.len()
    }

    pub fn age(&self, from: NodeId, to: NodeId) -> Option<Age> {
        self.in_flight.get(&(from, to)).copied()
    }

    /// `(from, to, age)` in lexicographic arc order.
    pub fn messages(&self) -> impl Iterator<Item = (NodeId, NodeId, Age)> + '_ {
        self.in_flight.iter().map(|(&(from, to), &age)| (from, to, age))
    }

    /// In-flight messages addressed to `v`.
    pub fn inbound(&self, v: NodeId) -> impl Iterator<Item = (NodeId, Age)> + '_ {
        self.messages().filter(move |&(_, to, _)| to == v).map(|(from, _, age)| (from, age))
    }
}

/// Messages the adversary holds this round; everything else is delivered.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AdversaryDecision {
    pub held: BTreeSet<(NodeId, NodeId)>,
}

impl AdversaryDecision {
    pub fn deliver_all() -> Self {
        Self::default()
    }

    pub fn hold(mut self, from: NodeId, to: NodeId) -> Self {
        self.held.insert((from, to));
        self
    }
}

/// What an adversary may look at when scheduling a round.
pub struct DecisionContext<'a> {
    pub graph: &'a Graph,
    pub round: usize,
    pub hold_cap: Age,
    pub configuration: &'a AsyncConfiguration,
    pub history: &'a [AsyncRound],
}

pub trait Adversary {
    fn name(&self) -> &str;

    /// True when `decide` depends on nothing but the graph, the hold cap and
    /// the configuration. Only such adversaries can certify non-termination.
    fn is_configuration_deterministic(&self) -> bool;

    fn decide(&mut self, ctx: &DecisionContext<'_>) -> AdversaryDecision;
}

/// Record of one asynchronous round.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AsyncRound {
    pub round: usize,
    /// In-flight messages at the start of the round.
    pub start: AsyncConfiguration,
    pub delivered: Vec<(NodeId, NodeId)>,
    /// Held messages with their age before this round's increment.
    pub held: Vec<(NodeId, NodeId, Age)>,
    pub receivers: Vec<NodeId>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AsyncOutcome {
    /// Nothing left in flight; `round` is the last round with a delivery.
    Terminated { round: usize },
    /// The configuration at the start of round `first_seen + period` equals
    /// the one at the start of `first_seen`.
    CycleDetected { first_seen: usize, period: usize },
    Exhausted { max_rounds: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AsyncVerdict {
    pub source: NodeId,
    pub outcome: AsyncOutcome,
    pub trace: Vec<AsyncRound>,
}

impl AsyncVerdict {
    pub fn holds_occurred(&self) -> bool {
        self.trace.iter().any(|r| !r.held.is_empty())
    }

    /// The equivalent synchronous trace, for runs that terminated without a
    /// single hold.
    pub fn to_sync_trace(&self, g: &Graph) -> Option<Trace> {
        let AsyncOutcome::Terminated { round } = self.outcome else { return None };
        if self.holds_occurred() {
            return None;
        }
        let mut rounds = Vec::with_capacity(self.trace.len());
        let mut round_sets = vec![vec![self.source]];
        for r in &self.trace {
            rounds.push(Configuration::from_pairs(g, r.delivered.iter().copied()).ok()?);
            round_sets.push(r.receivers.clone());
        }
        Some(Trace {
            source: self.source,
            node_count: g.node_count(),
            rounds,
            round_sets,
            termination_round: round,
        })
    }
}

/// Result of applying one decision to one configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoundStep {
    pub delivered: Vec<(NodeId, NodeId)>,
    pub held: Vec<(NodeId, NodeId, Age)>,
    pub receivers: Vec<NodeId>,
    pub next: AsyncConfiguration,
}

/// Plays one round: deliver everything not held, let each receiver answer
/// all neighbours it did not hear from this round, and age the held
/// messages. Rejects holds of unknown messages and holds past `hold_cap`.
pub fn advance(
    g: &Graph,
    config: &AsyncConfiguration,
    decision: &AdversaryDecision,
    hold_cap: Age,
) -> Result<RoundStep> {
    for &(from, to) in &decision.held {
        let age = config.age(from, to).ok_or(Error::UnknownHeldMessage { from, to })?;
        if age >= hold_cap {
            return Err(Error::UnfairSchedule { from, to, age, hold_cap });
        }
    }
    let mut delivered = Vec::new();
    let mut held = Vec::new();
    let mut inbox: BTreeMap<NodeId, BTreeSet<NodeId>> = BTreeMap::new();
    for (from, to, age) in config.messages() {
        if decision.held.contains(&(from, to)) {
            held.push((from, to, age));
        } else {
            delivered.push((from, to));
            inbox.entry(to).or_default().insert(from);
        }
    }
    let mut next = AsyncConfiguration::default();
    for &(from, to, age) in &held {
        next.insert(from, to, age + 1);
    }
    for (&v, senders) in &inbox {
        for &w in g.neighbors(v) {
            if !senders.contains(&w) {
                next.insert(v, w, 0);
            }
        }
    }
    Ok(RoundStep { delivered, held, receivers: inbox.into_keys().collect(), next })
}

/// Runs asynchronous flooding from `source` under `adversary`.
///
/// Stops with `Terminated` once nothing is in flight, with `CycleDetected`
/// when a round-start configuration repeats under a configuration-determined
/// adversary, and with `Exhausted` after `max_rounds` rounds otherwise.
pub fn run_async(
    g: &Graph,
    source: NodeId,
    adversary: &mut dyn Adversary,
    max_rounds: usize,
    hold_cap: Age,
) -> Result<AsyncVerdict> {
    g.check_node(source)?;
    g.require_connected()?;
    if hold_cap == 0 {
        return Err(Error::InvalidParameter("hold cap must be at least 1".into()));
    }
    let certify = adversary.is_configuration_deterministic();
    let mut seen: BTreeMap<AsyncConfiguration, usize> = BTreeMap::new();
    let mut trace: Vec<AsyncRound> = Vec::new();
    let mut config = AsyncConfiguration::initial(g, source)?;
    let mut last_delivery = 0;
    let mut round = 1;
    let outcome = loop {
        if config.is_empty() {
            break AsyncOutcome::Terminated { round: last_delivery };
        }
        if certify {
            if let Some(&first_seen) = seen.get(&config) {
                break AsyncOutcome::CycleDetected { first_seen, period: round - first_seen };
            }
            seen.insert(config.clone(), round);
        }
        if round > max_rounds {
            break AsyncOutcome::Exhausted { max_rounds };
        }
        let decision = adversary.decide(&DecisionContext {
            graph: g,
            round,
            hold_cap,
            configuration: &config,
            history: &trace,
        });
        let step = advance(g, &config, &decision, hold_cap)?;
        if !step.delivered.is_empty() {
            last_delivery = round;
        }
        trace.push(AsyncRound {
            round,
            start: core::mem::replace(&mut config, step.next),
            delivered: step.delivered,
            held: step.held,
            receivers: step.receivers,
        });
        round += 1;
    };
    Ok(AsyncVerdict { source, outcome, trace })
}

/// Replays one full period from the first configuration of a detected cycle
/// and checks that every intermediate configuration and the returning one
/// match the recorded run.
pub fn replay_cycle(
    g: &Graph,
    adversary: &mut dyn Adversary,
    verdict: &AsyncVerdict,
    hold_cap: Age,
) -> Result<bool> {
    let AsyncOutcome::CycleDetected { first_seen, period } = verdict.outcome else {
        return Ok(false);
    };
    let start = &verdict.trace[first_seen - 1].start;
    let mut config = start.clone();
    let mut history = Vec::new();
    for k in 0..period {
        let round = first_seen + k;
        if verdict.trace.get(round - 1).map(|r| &r.start) != Some(&config) {
            return Ok(false);
        }
        let decision = adversary.decide(&DecisionContext {
            graph: g,
            round,
            hold_cap,
            configuration: &config,
            history: &history,
        });
        let step = advance(g, &config, &decision, hold_cap)?;
        history.push(AsyncRound {
            round,
            start: core::mem::replace(&mut config, step.next),
            delivered: step.delivered,
            held: step.held,
            receivers: step.receivers,
        });
    }
    Ok(&config == start)
}
