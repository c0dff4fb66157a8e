use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::ops::Range;

use super::audit::audit_with_profile;
use super::classify::ClassificationReport;
use super::enumerate::{connected_graphs, mask_count};
use crate::graph::{diameter, distance_profile, is_bipartite, Graph, NodeId};
use crate::sync::{default_max_rounds, round_multiplicity, run_sync, Trace};
use crate::{Error, Result};

/// Largest node count the exhaustive sweep accepts (`2^21` masks).
pub const SWEEP_MAX_NODES: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ViolationKind {
    /// Flooding did not end before round `2n + 1`.
    TerminationBound,
    /// A node appeared in three or more round-sets.
    Multiplicity,
    /// Bipartite graph whose termination round differs from the eccentricity.
    BipartiteExact,
    /// Non-bipartite graph outside `e < j <= e + d + 1`.
    NonbipartiteWindow,
    /// A named trace-level audit failed.
    Lemma(&'static str),
    /// Any other engine error.
    Engine,
}

impl ViolationKind {
    pub fn name(&self) -> String {
        match self {
            ViolationKind::TerminationBound => "termination_bound".into(),
            ViolationKind::Multiplicity => "multiplicity".into(),
            ViolationKind::BipartiteExact => "bipartite_exact".into(),
            ViolationKind::NonbipartiteWindow => "nonbipartite_window".into(),
            ViolationKind::Lemma(check) => format!("audit:{check}"),
            ViolationKind::Engine => "engine".into(),
        }
    }
}

/// A counterexample found by the sweep, kept with everything needed to
/// reproduce it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub mask: u64,
    pub graph: Graph,
    pub source: NodeId,
    pub kind: ViolationKind,
    pub detail: String,
    pub trace: Option<Trace>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepSummary {
    pub n_max: usize,
    /// Connected labeled graphs visited.
    pub graphs: u64,
    /// `(graph, source)` pairs flooded.
    pub runs: u64,
    /// Runs on graphs the colouring oracle calls bipartite.
    pub bipartite_runs: u64,
    pub violations: Vec<Violation>,
    pub j_minus_e_histogram: BTreeMap<usize, u64>,
    pub max_j: usize,
}

impl SweepSummary {
    pub fn empty(n_max: usize) -> Self {
        SweepSummary {
            n_max,
            graphs: 0,
            runs: 0,
            bipartite_runs: 0,
            violations: Vec::new(),
            j_minus_e_histogram: BTreeMap::new(),
            max_j: 0,
        }
    }

    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    /// Folds a partial summary in. The result does not depend on merge
    /// order.
    pub fn merge(&mut self, other: SweepSummary) {
        self.graphs += other.graphs;
        self.runs += other.runs;
        self.bipartite_runs += other.bipartite_runs;
        self.max_j = self.max_j.max(other.max_j);
        for (k, v) in other.j_minus_e_histogram {
            *self.j_minus_e_histogram.entry(k).or_default() += v;
        }
        self.violations.extend(other.violations);
        self.violations.sort_by(|a, b| {
            (a.graph.node_count(), a.mask, a.source, a.kind)
                .cmp(&(b.graph.node_count(), b.mask, b.source, b.kind))
        });
    }
}

pub fn check_sweep_bound(n_max: usize) -> Result<()> {
    if (2..=SWEEP_MAX_NODES).contains(&n_max) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "sweep bound {n_max} is outside 2..={SWEEP_MAX_NODES}"
        )))
    }
}

/// Sweeps the connected graphs among `masks` on `n` nodes, every source.
pub fn sweep_masks(n_max: usize, n: usize, masks: Range<u64>) -> SweepSummary {
    let mut summary = SweepSummary::empty(n_max);
    for mg in connected_graphs(n, masks) {
        summary.graphs += 1;
        let g = mg.to_graph();
        let d = diameter(&g).expect("enumeration yields connected graphs");
        let bipartite = is_bipartite(&g).is_bipartite();
        for source in 0..n {
            check_run(&mut summary, mg.mask(), &g, source, d, bipartite);
        }
    }
    summary
}

/// Every connected labeled graph on `1..=n_max` nodes, every source.
pub fn sweep(n_max: usize) -> Result<SweepSummary> {
    check_sweep_bound(n_max)?;
    let mut summary = SweepSummary::empty(n_max);
    for n in 1..=n_max {
        summary.merge(sweep_masks(n_max, n, 0..mask_count(n)));
    }
    Ok(summary)
}

fn check_run(summary: &mut SweepSummary, mask: u64, g: &Graph, source: NodeId, d: usize, bipartite: bool) {
    let n = g.node_count();
    let mut report = |kind, detail: String, trace: Option<&Trace>| {
        summary.violations.push(Violation {
            mask,
            graph: g.clone(),
            source,
            kind,
            detail,
            trace: trace.cloned(),
        })
    };
    summary.runs += 1;
    if bipartite {
        summary.bipartite_runs += 1;
    }

    let trace = match run_sync(g, source, default_max_rounds(n)) {
        Ok(trace) => trace,
        Err(err) => {
            let (kind, trace) = match &err {
                Error::NonTermination { trace, .. } | Error::TerminationBoundExceeded { trace, .. } => {
                    (ViolationKind::TerminationBound, Some(&**trace))
                }
                Error::MultiplicityExceeded { trace, .. } => (ViolationKind::Multiplicity, Some(&**trace)),
                _ => (ViolationKind::Engine, None),
            };
            report(kind, format!("{err}"), trace);
            return;
        }
    };
    let j = trace.termination_round;
    if j > 2 * n {
        report(ViolationKind::TerminationBound, format!("terminated at round {j}"), Some(&trace));
    }
    if let Some(count) = round_multiplicity(&trace).into_iter().find(|&c| c > 2) {
        report(ViolationKind::Multiplicity, format!("a node is in {count} round-sets"), Some(&trace));
    }

    let profile = distance_profile(g, source).expect("connected");
    let e = profile.eccentricity;
    let classification = ClassificationReport::from_parts(source, bipartite, e, d, j);
    if !classification.window_ok {
        let kind = if bipartite {
            ViolationKind::BipartiteExact
        } else {
            ViolationKind::NonbipartiteWindow
        };
        report(kind, format!("e={e} d={d} j={j}"), Some(&trace));
    }
    let audit = audit_with_profile(g, &profile, &trace);
    for (name, check) in audit.checks() {
        if let Some(cx) = &check.counterexample {
            let detail = format!("node {} round {}: {}", cx.node, cx.round, cx.detail);
            report(ViolationKind::Lemma(name), detail, Some(&trace));
        }
    }

    *summary.j_minus_e_histogram.entry(j.saturating_sub(e)).or_default() += 1;
    summary.max_j = summary.max_j.max(j);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds() {
        assert!(sweep(1).is_err());
        assert!(sweep(8).is_err());
    }

    #[test]
    fn three_nodes() {
        let s = sweep(3).unwrap();
        assert!(s.is_clean());
        // 1 + 1 + 4 connected labeled graphs; runs 1 + 2 + 12.
        assert_eq!((s.graphs, s.runs), (6, 15));
        // Only the triangle is non-bipartite: 3 runs with j - e = 2.
        assert_eq!(s.j_minus_e_histogram.get(&2), Some(&3));
        assert_eq!(s.j_minus_e_histogram.get(&0), Some(&12));
        assert_eq!(s.max_j, 3);
    }

    #[test]
    fn merge_is_order_independent() {
        let a = sweep_masks(4, 4, 0..20);
        let b = sweep_masks(4, 4, 20..64);
        let mut ab = a.clone();
        ab.merge(b.clone());
        let mut ba = b;
        ba.merge(a);
        assert_eq!(ab, ba);
        assert_eq!(ab, sweep_masks(4, 4, 0..64));
    }
}
