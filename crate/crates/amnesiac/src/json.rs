//! JSON views of traces, reports and summaries.
//!
//! Everything is built as `serde_json::Value`, whose maps keep keys sorted,
//! and arc lists come out in lexicographic order, so identical inputs give
//! byte-identical output.

use amnesiac_core::analysis::{ClassificationReport, LemmaAudit, SharpSearch, SharpWitness, SweepSummary};
use amnesiac_core::asynchronous::{Adversary, AsyncOutcome, AsyncVerdict};
use amnesiac_core::sync::Trace;
use amnesiac_core::Graph;
use serde_json::{json, Map, Value};

/// Compact JSON followed by a newline.
pub fn to_line(value: &Value) -> String {
    let mut s = value.to_string();
    s.push('\n');
    s
}

fn edges(g: &Graph) -> Value {
    json!(g.edges().iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>())
}

pub fn trace(g: &Graph, t: &Trace) -> Value {
    let rounds: Vec<Vec<[usize; 2]>> = t
        .rounds
        .iter()
        .map(|c| c.pairs(g).into_iter().map(|(u, v)| [u, v]).collect())
        .collect();
    json!({
        "source": t.source,
        "rounds": rounds,
        "round_sets": t.round_sets,
        "termination_round": t.termination_round,
    })
}

pub fn classification(r: &ClassificationReport) -> Value {
    json!({
        "source": r.source,
        "bipartite": r.bipartite,
        "eccentricity": r.eccentricity,
        "diameter": r.diameter,
        "termination_round": r.termination_round,
        "window_ok": r.window_ok,
        "theorem_applied": r.theorem_applied.as_str(),
    })
}

pub fn audit(a: &LemmaAudit) -> Value {
    let mut checks = Map::new();
    for (name, check) in a.checks() {
        let counterexample = check.counterexample.as_ref().map(|cx| {
            json!({ "node": cx.node, "round": cx.round, "detail": cx.detail })
        });
        checks.insert(
            name.to_owned(),
            json!({ "passed": check.passed(), "counterexample": counterexample }),
        );
    }
    json!({ "all_passed": a.all_passed(), "checks": checks })
}

pub fn verdict(outcome: &AsyncOutcome) -> Value {
    match *outcome {
        AsyncOutcome::Terminated { round } => json!({
            "outcome": "terminated", "round": round, "first_seen": null, "period": null,
        }),
        AsyncOutcome::CycleDetected { first_seen, period } => json!({
            "outcome": "cycle_detected", "round": null, "first_seen": first_seen, "period": period,
        }),
        AsyncOutcome::Exhausted { max_rounds } => json!({
            "outcome": "exhausted", "round": max_rounds, "first_seen": null, "period": null,
        }),
    }
}

/// Asynchronous run in the shape of the synchronous trace, plus ages, holds
/// and the verdict. `rounds` lists deliveries.
pub fn async_run(v: &AsyncVerdict, adversary: &dyn Adversary, hold_cap: u32) -> Value {
    let rounds: Vec<_> = v.trace.iter().map(|r| r.delivered.iter().map(|&(a, b)| [a, b]).collect::<Vec<_>>()).collect();
    let holds: Vec<_> = v
        .trace
        .iter()
        .map(|r| r.held.iter().map(|&(a, b, age)| json!([a, b, age])).collect::<Vec<_>>())
        .collect();
    let in_flight: Vec<_> = v
        .trace
        .iter()
        .map(|r| r.start.messages().map(|(a, b, age)| json!([a, b, age])).collect::<Vec<_>>())
        .collect();
    let mut round_sets = vec![vec![v.source]];
    round_sets.extend(v.trace.iter().map(|r| r.receivers.clone()));
    json!({
        "source": v.source,
        "adversary": adversary.name(),
        "hold_cap": hold_cap,
        "rounds": rounds,
        "holds": holds,
        "in_flight": in_flight,
        "round_sets": round_sets,
        "verdict": verdict(&v.outcome),
    })
}

pub fn sweep(s: &SweepSummary) -> Value {
    let violations: Vec<_> = s
        .violations
        .iter()
        .map(|v| {
            json!({
                "kind": v.kind.name(),
                "node_count": v.graph.node_count(),
                "mask": v.mask,
                "edges": edges(&v.graph),
                "source": v.source,
                "detail": v.detail,
                "trace": v.trace.as_ref().map(|t| trace(&v.graph, t)),
            })
        })
        .collect();
    let histogram: Map<String, Value> =
        s.j_minus_e_histogram.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
    json!({
        "n_max": s.n_max,
        "graphs": s.graphs,
        "runs": s.runs,
        "violations": violations,
        "j_minus_e_histogram": histogram,
        "max_j": s.max_j,
    })
}

fn witness(w: &SharpWitness) -> Value {
    json!({
        "node_count": w.graph.node_count(),
        "edges": edges(&w.graph),
        "source": w.source,
        "eccentricity": w.eccentricity,
        "diameter": w.diameter,
        "termination_round": w.termination_round,
    })
}

pub fn sharp(s: &SharpSearch) -> Value {
    let frontier: Vec<_> = s.frontier.values().map(witness).collect();
    json!({
        "scanned_up_to": s.scanned_up_to,
        "witness": s.witness.as_ref().map(witness),
        "frontier": frontier,
    })
}
