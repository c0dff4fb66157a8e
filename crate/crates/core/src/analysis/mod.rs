//! Theorem and lemma verifiers, exhaustive sweeps and the sharpness search.

mod audit;
mod classify;
pub mod enumerate;
mod sharp;
mod sweep;

pub use audit::{audit_lemmas, audit_with_profile, Check, Counterexample, LemmaAudit};
pub use classify::{classify, ClassificationReport, TerminationRegime};
pub use sharp::{find_sharp_example, find_sharp_with, SharpSearch, SharpTarget, SharpWitness, SHARP_MAX_NODES};
pub use sweep::{
    check_sweep_bound, sweep, sweep_masks, SweepSummary, Violation, ViolationKind, SWEEP_MAX_NODES,
};
