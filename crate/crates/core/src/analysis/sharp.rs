use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use super::enumerate::{connected_graphs, mask_count};
use crate::graph::{Graph, NodeId};
use crate::sync::{default_max_rounds, run_sync};
use crate::{Error, Result};

/// Largest node count the sharpness search accepts.
pub const SHARP_MAX_NODES: usize = 8;

/// A `(graph, source)` pair whose flooding ends at round `e + d + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SharpWitness {
    pub graph: Graph,
    pub mask: u64,
    pub source: NodeId,
    pub eccentricity: usize,
    pub diameter: usize,
    pub termination_round: usize,
}

impl SharpWitness {
    // Preference: fewer nodes, fewer edges, lexicographically smaller edge
    // list, smaller source.
    fn precedes(&self, other: &SharpWitness) -> bool {
        let key = |w: &SharpWitness| (w.graph.node_count(), w.graph.edge_count(), w.graph.edges().to_vec(), w.source);
        key(self) < key(other)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SharpTarget {
    /// Any witness with eccentricity strictly below the diameter.
    EccentricityBelowDiameter,
    /// A witness with exactly this eccentricity and diameter.
    Exact { eccentricity: usize, diameter: usize },
}

impl SharpTarget {
    fn accepts(self, e: usize, d: usize) -> bool {
        match self {
            SharpTarget::EccentricityBelowDiameter => e < d,
            SharpTarget::Exact { eccentricity, diameter } => e == eccentricity && d == diameter,
        }
    }

    fn admits_diameter(self, d: usize) -> bool {
        match self {
            SharpTarget::EccentricityBelowDiameter => d >= 2,
            SharpTarget::Exact { diameter, .. } => d == diameter,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SharpSearch {
    pub target: SharpTarget,
    /// Node counts `1..=scanned_up_to` were searched completely.
    pub scanned_up_to: usize,
    /// Preferred witness for the target, if one was found.
    pub witness: Option<SharpWitness>,
    /// Preferred witness per attained `(eccentricity, diameter)` among the
    /// graphs the search evaluated.
    pub frontier: BTreeMap<(usize, usize), SharpWitness>,
}

/// Smallest witness with `j = e + d + 1` and `e < d` on at most `n_max` nodes.
pub fn find_sharp_example(n_max: usize) -> Result<SharpSearch> {
    find_sharp_with(n_max, SharpTarget::EccentricityBelowDiameter)
}

/// Scans connected labeled graphs in order of node count and stops after the
/// first node count that yields a witness for `target`. Graphs whose diameter
/// cannot match the target are skipped without flooding, so the frontier
/// only covers the diameters the target admits.
pub fn find_sharp_with(n_max: usize, target: SharpTarget) -> Result<SharpSearch> {
    if !(1..=SHARP_MAX_NODES).contains(&n_max) {
        return Err(Error::InvalidParameter(format!(
            "sharpness search bound {n_max} is outside 1..={SHARP_MAX_NODES}"
        )));
    }
    let mut search = SharpSearch { target, scanned_up_to: 0, witness: None, frontier: BTreeMap::new() };
    for n in 1..=n_max {
        for mg in connected_graphs(n, 0..mask_count(n)) {
            let d = mg.diameter();
            if !target.admits_diameter(d) {
                continue;
            }
            let eccentricities: Vec<usize> = (0..n).map(|v| mg.eccentricity(v)).collect();
            let g = mg.to_graph();
            for (source, &e) in eccentricities.iter().enumerate() {
                let trace = run_sync(&g, source, default_max_rounds(n))?;
                let j = trace.termination_round;
                if j != e + d + 1 {
                    continue;
                }
                let candidate = SharpWitness {
                    graph: g.clone(),
                    mask: mg.mask(),
                    source,
                    eccentricity: e,
                    diameter: d,
                    termination_round: j,
                };
                if search.frontier.get(&(e, d)).is_none_or(|w| candidate.precedes(w)) {
                    search.frontier.insert((e, d), candidate.clone());
                }
                if target.accepts(e, d) && search.witness.as_ref().is_none_or(|w| candidate.precedes(w)) {
                    search.witness = Some(candidate);
                }
            }
        }
        search.scanned_up_to = n;
        if search.witness.is_some() {
            break;
        }
    }
    Ok(search)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_and_five_cycle_are_on_the_frontier() {
        let search = find_sharp_with(5, SharpTarget::Exact { eccentricity: 2, diameter: 2 }).unwrap();
        let w = search.witness.unwrap();
        assert_eq!((w.eccentricity, w.diameter, w.termination_round), (2, 2, 5));
        // Triangle with a pendant, flooded from the pendant.
        assert_eq!(w.graph.node_count(), 4);
        assert_eq!(w.graph.degree(w.source), 1);

        let search = find_sharp_with(3, SharpTarget::Exact { eccentricity: 1, diameter: 1 }).unwrap();
        let w = search.witness.unwrap();
        assert_eq!(w.graph.edges(), &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!((w.source, w.termination_round), (0, 3));
    }

    #[test]
    fn smallest_proper_witness() {
        let search = find_sharp_example(8).unwrap();
        let w = search.witness.unwrap();
        assert!(w.eccentricity < w.diameter);
        assert_eq!(w.termination_round, w.eccentricity + w.diameter + 1);
        // A triangle with a pendant: the source sees everything, d = 2, j = 4.
        assert_eq!(search.scanned_up_to, 4);
        assert_eq!((w.eccentricity, w.diameter), (1, 2));
    }

    #[test]
    fn bound_is_checked() {
        assert!(find_sharp_example(0).is_err());
        assert!(find_sharp_example(9).is_err());
    }
}
