use crate::graph::{distance_profile, ec_nodes, DistanceProfile, Graph, NodeId};
use crate::sync::Trace;
use crate::Result;

/// First failure found by a check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub node: NodeId,
    pub round: usize,
    pub detail: &'static str,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Check {
    pub counterexample: Option<Counterexample>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }

    fn fail(&mut self, node: NodeId, round: usize, detail: &'static str) {
        if self.counterexample.is_none() {
            self.counterexample = Some(Counterexample { node, round, detail });
        }
    }
}

/// Trace-level checks relating round-sets to BFS layers.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LemmaAudit {
    /// Every node at distance `j` receives in round `j`, and nothing is
    /// received before the round equal to its distance.
    pub layers_within_rounds: Check,
    /// Every edge from layer `j` to layer `j + 1` carries a send in round `j + 1`.
    pub frontier_edges_fire: Check,
    /// An ec node at distance `j >= 1` receives for the second time in round `j + 1`.
    pub ec_second_receipt: Check,
    /// No ec nodes exactly when every node receives in a single round.
    pub single_receipt_iff_no_ec: Check,
    /// If `h` receives for the second time in round `j`, each neighbour's
    /// second receipt falls in round `j - 1`, `j` or `j + 1`.
    pub neighbor_second_receipt: Check,
}

impl LemmaAudit {
    pub fn checks(&self) -> [(&'static str, &Check); 5] {
        [
            ("layers_within_rounds", &self.layers_within_rounds),
            ("frontier_edges_fire", &self.frontier_edges_fire),
            ("ec_second_receipt", &self.ec_second_receipt),
            ("single_receipt_iff_no_ec", &self.single_receipt_iff_no_ec),
            ("neighbor_second_receipt", &self.neighbor_second_receipt),
        ]
    }

    pub fn all_passed(&self) -> bool {
        self.checks().iter().all(|(_, c)| c.passed())
    }

    pub fn first_failure(&self) -> Option<(&'static str, &Counterexample)> {
        self.checks()
            .into_iter()
            .find_map(|(name, c)| c.counterexample.as_ref().map(|cx| (name, cx)))
    }
}

/// Audits a trace produced by `run_sync(g, source, ..)`. Failures are
/// reported in the audit; only a disconnected graph is an error.
pub fn audit_lemmas(g: &Graph, source: NodeId, t: &Trace) -> Result<LemmaAudit> {
    let profile = distance_profile(g, source)?;
    Ok(audit_with_profile(g, &profile, t))
}

pub fn audit_with_profile(g: &Graph, profile: &DistanceProfile, t: &Trace) -> LemmaAudit {
    let mut audit = LemmaAudit::default();
    let dist = &profile.dist;
    let occ = t.all_occurrences();

    let check = &mut audit.layers_within_rounds;
    for (j, layer) in profile.layers.iter().enumerate() {
        let round_set = t.round_set(j);
        for &v in layer {
            if round_set.binary_search(&v).is_err() {
                check.fail(v, j, "node at this distance did not receive in the matching round");
            }
        }
    }
    for (round, set) in t.round_sets.iter().enumerate() {
        for &v in set {
            if dist[v] > round {
                check.fail(v, round, "node received before the round equal to its distance");
            }
        }
    }

    let check = &mut audit.frontier_edges_fire;
    for &(a, b) in g.edges() {
        let (near, far) = if dist[a] < dist[b] { (a, b) } else { (b, a) };
        if dist[far] != dist[near] + 1 {
            continue;
        }
        let fired = t.rounds.get(dist[near]).is_some_and(|c| c.contains(g, near, far));
        if !fired {
            check.fail(far, dist[near] + 1, "no send across a layer-to-layer edge");
        }
    }

    let report = ec_nodes(g, profile.source).expect("profile exists, so the graph is connected");
    let check = &mut audit.ec_second_receipt;
    for &v in &report.ec_nodes {
        let j = dist[v];
        if j >= 1 && occ[v].get(1) != Some(&(j + 1)) {
            check.fail(v, j + 1, "ec node's second receipt is not one round after its distance");
        }
    }

    let check = &mut audit.single_receipt_iff_no_ec;
    let repeated = (0..g.node_count()).find(|&v| occ[v].len() != 1);
    match (report.ec_nodes.first(), repeated) {
        (None, Some(v)) => {
            let round = occ[v].get(1).copied().unwrap_or(0);
            check.fail(v, round, "no ec nodes, yet a node does not receive exactly once");
        }
        (Some(&v), None) => {
            check.fail(v, dist[v] + 1, "ec nodes exist, yet every node receives exactly once");
        }
        _ => {}
    }

    let check = &mut audit.neighbor_second_receipt;
    for h in 0..g.node_count() {
        let Some(&j) = occ[h].get(1) else { continue };
        for &neighbor in g.neighbors(h) {
            let ok = occ[neighbor].get(1).is_some_and(|&k| k + 1 >= j && k <= j + 1);
            if !ok {
                check.fail(neighbor, j, "neighbour's second receipt is more than one round away");
            }
        }
    }

    audit
}
