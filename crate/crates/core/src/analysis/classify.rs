use crate::graph::{diameter, distance_profile, is_bipartite, Graph, NodeId};
use crate::sync::{default_max_rounds, run_sync};
use crate::Result;

/// Which termination regime a run falls under.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TerminationRegime {
    /// Bipartite graph: flooding ends exactly at the source's eccentricity.
    BipartiteExact,
    /// Non-bipartite graph: `e < j <= e + d + 1`.
    NonbipartiteWindow,
}

impl TerminationRegime {
    pub fn as_str(self) -> &'static str {
        match self {
            TerminationRegime::BipartiteExact => "bipartite_exact",
            TerminationRegime::NonbipartiteWindow => "nonbipartite_window",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub source: NodeId,
    pub bipartite: bool,
    pub eccentricity: usize,
    pub diameter: usize,
    pub termination_round: usize,
    pub window_ok: bool,
    pub theorem_applied: TerminationRegime,
}

impl ClassificationReport {
    /// Assembles a report from independently computed parts. `bipartite`
    /// must come from the colouring oracle, not from the flooding run.
    pub fn from_parts(
        source: NodeId,
        bipartite: bool,
        eccentricity: usize,
        diameter: usize,
        termination_round: usize,
    ) -> Self {
        let (e, d, j) = (eccentricity, diameter, termination_round);
        let (window_ok, theorem_applied) = if bipartite {
            (j == e, TerminationRegime::BipartiteExact)
        } else {
            (e < j && j <= e + d + 1, TerminationRegime::NonbipartiteWindow)
        };
        ClassificationReport {
            source,
            bipartite,
            eccentricity,
            diameter,
            termination_round,
            window_ok,
            theorem_applied,
        }
    }
}

/// Floods `g` from `source` and checks the termination round against the
/// window predicted by the static oracles.
pub fn classify(g: &Graph, source: NodeId) -> Result<ClassificationReport> {
    let trace = run_sync(g, source, default_max_rounds(g.node_count()))?;
    let profile = distance_profile(g, source)?;
    Ok(ClassificationReport::from_parts(
        source,
        is_bipartite(g).is_bipartite(),
        profile.eccentricity,
        diameter(g)?,
        trace.termination_round,
    ))
}
