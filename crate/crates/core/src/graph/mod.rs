//! Undirected simple graphs with dense node ids, plus generators and the
//! static oracles (distances, diameter, bipartiteness, ec nodes).

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

mod generate;
mod oracle;

pub use generate::NamedGraph;
pub use oracle::{
    diameter, distance_profile, ec_nodes, is_bipartite, Bipartiteness, DistanceProfile, EcReport,
};

/// Dense node identifier in `0..node_count`.
pub type NodeId = usize;

/// Immutable undirected simple graph.
///
/// Adjacency is stored in compressed form: the outgoing arcs of node `v` are
/// `offsets[v]..offsets[v + 1]`, sorted by target. Every undirected edge
/// contributes two arcs, so arc ids run over `0..2m`; configurations of the
/// flooding engines are bitsets over these ids.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    node_count: usize,
    edges: Vec<(NodeId, NodeId)>,
    offsets: Vec<usize>,
    arc_sources: Vec<NodeId>,
    arc_targets: Vec<NodeId>,
    reverse: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph on `node_count` nodes. Edge orientation is ignored and
    /// duplicates are collapsed; self-loops and out-of-range endpoints are
    /// rejected.
    pub fn new<I>(node_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (NodeId, NodeId)>,
    {
        if node_count == 0 {
            return Err(Error::InvalidParameter("a graph needs at least one node".into()));
        }
        let mut normalized = Vec::new();
        for (u, v) in edges {
            for node in [u, v] {
                if node >= node_count {
                    return Err(Error::NodeOutOfRange { node, node_count });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        normalized.dedup();

        let mut degree = vec![0usize; node_count];
        for &(u, v) in &normalized {
            degree[u] += 1;
            degree[v] += 1;
        }
        let mut offsets = Vec::with_capacity(node_count + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let arc_count = 2 * normalized.len();
        let mut arc_targets = vec![0; arc_count];
        let mut arc_sources = vec![0; arc_count];
        let mut fill = offsets[..node_count].to_vec();
        for &(u, v) in &normalized {
            arc_targets[fill[u]] = v;
            fill[u] += 1;
            arc_targets[fill[v]] = u;
            fill[v] += 1;
        }
        for v in 0..node_count {
            arc_targets[offsets[v]..offsets[v + 1]].sort_unstable();
            for slot in &mut arc_sources[offsets[v]..offsets[v + 1]] {
                *slot = v;
            }
        }

        let mut graph = Graph {
            node_count,
            edges: normalized,
            offsets,
            arc_sources,
            arc_targets,
            reverse: Vec::new(),
            labels: None,
        };
        graph.reverse = (0..arc_count)
            .map(|arc| {
                let (u, v) = graph.arc(arc);
                graph.arc_id(v, u).expect("undirected edge has both arcs")
            })
            .collect();
        Ok(graph)
    }

    /// Attaches display labels, one per node.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.node_count {
            return Err(Error::InvalidParameter(alloc::format!(
                "{} labels for {} nodes",
                labels.len(),
                self.node_count
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Number of directed arcs, i.e. `2m`.
    pub fn arc_count(&self) -> usize {
        self.arc_targets.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[(NodeId, NodeId)] {
        &self.edges
    }

    /// Neighbours of `v` in increasing id order.
    pub fn neighbors(&self, v: NodeId) -> &[NodeId] {
        &self.arc_targets[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: NodeId) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        self.arc_id(u, v).is_some()
    }

    /// Arc ids leaving `v`; arc `offsets[v] + k` points at `neighbors(v)[k]`.
    pub fn arcs_from(&self, v: NodeId) -> core::ops::Range<usize> {
        self.offsets[v]..self.offsets[v + 1]
    }

    pub fn arc_id(&self, from: NodeId, to: NodeId) -> Option<usize> {
        if from >= self.node_count || to >= self.node_count {
            return None;
        }
        self.neighbors(from)
            .binary_search(&to)
            .ok()
            .map(|k| self.offsets[from] + k)
    }

    /// `(from, to)` endpoints of an arc.
    pub fn arc(&self, arc: usize) -> (NodeId, NodeId) {
        (self.arc_sources[arc], self.arc_targets[arc])
    }

    pub fn reverse_arc(&self, arc: usize) -> usize {
        self.reverse[arc]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: NodeId) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    /// Label when present, otherwise the decimal id.
    pub fn display_name(&self, v: NodeId) -> String {
        match self.label(v) {
            Some(label) => label.into(),
            None => v.to_string(),
        }
    }

    /// Resolves a user-supplied node reference: labels win, then plain ids.
    pub fn resolve(&self, name: &str) -> Option<NodeId> {
        if let Some(labels) = &self.labels {
            if let Some(v) = labels.iter().position(|l| l == name) {
                return Some(v);
            }
        }
        name.parse::<NodeId>().ok().filter(|&v| v < self.node_count)
    }

    pub fn check_node(&self, v: NodeId) -> Result<()> {
        if v < self.node_count {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange { node: v, node_count: self.node_count })
        }
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.node_count];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for &w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == self.node_count
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn collapses_duplicates_and_orientation() {
        let g = Graph::new(3, [(0, 1), (1, 0), (2, 1), (1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(g.neighbors(1), &[0, 2]);
        assert_eq!(g.arc_count(), 4);
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(matches!(Graph::new(3, [(1, 1)]), Err(Error::SelfLoop(1))));
        assert!(matches!(
            Graph::new(3, [(0, 3)]),
            Err(Error::NodeOutOfRange { node: 3, node_count: 3 })
        ));
        assert!(Graph::new(0, []).is_err());
    }

    #[test]
    fn arcs_and_reverses_agree() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        for arc in 0..g.arc_count() {
            let (u, v) = g.arc(arc);
            assert_eq!(g.arc_id(u, v), Some(arc));
            assert_eq!(g.arc(g.reverse_arc(arc)), (v, u));
        }
        assert_eq!(g.arc_id(1, 3), None);
    }

    #[test]
    fn resolves_labels_before_ids() {
        let g = Graph::new(3, [(0, 1), (1, 2)])
            .unwrap()
            .with_labels(vec!["2".into(), "x".into(), "y".into()])
            .unwrap();
        assert_eq!(g.resolve("2"), Some(0));
        assert_eq!(g.resolve("x"), Some(1));
        assert_eq!(g.resolve("1"), Some(1));
        assert_eq!(g.resolve("7"), None);
    }

    #[test]
    fn connectivity() {
        assert!(Graph::new(1, []).unwrap().is_connected());
        assert!(!Graph::new(3, [(0, 1)]).unwrap().is_connected());
    }
}
