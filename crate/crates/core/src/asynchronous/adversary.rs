use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Adversary, AdversaryDecision, DecisionContext};

/// Delivers everything immediately; equivalent to the synchronous model.
#[derive(Clone, Copy, Debug, Default)]
pub struct ZeroDelayAdversary;

impl Adversary for ZeroDelayAdversary {
    fn name(&self) -> &str {
        "zero"
    }

    fn is_configuration_deterministic(&self) -> bool {
        true
    }

    fn decide(&mut self, _ctx: &DecisionContext<'_>) -> AdversaryDecision {
        AdversaryDecision::deliver_all()
    }
}

/// On a triangle, whenever a node is about to receive fresh copies from both
/// other nodes at once, delivers only the lower-id sender's copy and holds
/// the other for one round. This keeps the message circulating forever. On
/// any other graph it holds nothing.
#[derive(Clone, Copy, Debug, Default)]
pub struct TriangleHoldAdversary;

pub fn triangle_hold_adversary() -> TriangleHoldAdversary {
    TriangleHoldAdversary
}

impl Adversary for TriangleHoldAdversary {
    fn name(&self) -> &str {
        "triangle-hold"
    }

    fn is_configuration_deterministic(&self) -> bool {
        true
    }

    fn decide(&mut self, ctx: &DecisionContext<'_>) -> AdversaryDecision {
        let mut decision = AdversaryDecision::deliver_all();
        let g = ctx.graph;
        if g.node_count() != 3 || g.edge_count() != 3 {
            return decision;
        }
        for v in 0..3 {
            let mut inbound = ctx.configuration.inbound(v);
            if let (Some((low, 0)), Some((high, 0)), None) = (inbound.next(), inbound.next(), inbound.next()) {
                debug_assert!(low < high);
                decision = decision.hold(high, v);
            }
        }
        decision
    }
}

/// Holds each message that may still be held with a fixed probability,
/// drawing from a seeded ChaCha8 stream. Depends on its own state, so it
/// never certifies non-termination.
#[derive(Clone, Debug)]
pub struct RandomHoldAdversary {
    rng: ChaCha8Rng,
    hold_probability: f64,
}

impl RandomHoldAdversary {
    /// `hold_probability` is clamped to `[0, 1]`.
    pub fn new(seed: u64, hold_probability: f64) -> Self {
        let p = if hold_probability.is_nan() { 0.0 } else { hold_probability.clamp(0.0, 1.0) };
        RandomHoldAdversary { rng: ChaCha8Rng::seed_from_u64(seed), hold_probability: p }
    }
}

impl Adversary for RandomHoldAdversary {
    fn name(&self) -> &str {
        "random"
    }

    fn is_configuration_deterministic(&self) -> bool {
        false
    }

    fn decide(&mut self, ctx: &DecisionContext<'_>) -> AdversaryDecision {
        let mut decision = AdversaryDecision::deliver_all();
        for (from, to, age) in ctx.configuration.messages() {
            if age < ctx.hold_cap && self.rng.random_bool(self.hold_probability) {
                decision = decision.hold(from, to);
            }
        }
        decision
    }
}
