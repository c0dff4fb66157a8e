use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use super::{Graph, NodeId};
use crate::Result;

/// BFS layers around a source node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceProfile {
    pub source: NodeId,
    /// Hop distance from the source, indexed by node.
    pub dist: Vec<usize>,
    /// `layers[j]` holds the nodes at distance exactly `j`, in id order.
    pub layers: Vec<Vec<NodeId>>,
    pub eccentricity: usize,
}

impl DistanceProfile {
    pub fn layer(&self, j: usize) -> &[NodeId] {
        self.layers.get(j).map_or(&[], Vec::as_slice)
    }
}

/// Nodes adjacent to another node at the same distance from the source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EcReport {
    pub source: NodeId,
    pub ec_nodes: Vec<NodeId>,
    /// Edges `(u, v)`, `u < v`, whose endpoints are equidistant from the source.
    pub witness_edges: Vec<(NodeId, NodeId)>,
}

/// Outcome of the BFS 2-colouring oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bipartiteness {
    /// `coloring[v]` is 0 or 1 and every edge joins different colours.
    Bipartite { coloring: Vec<u8> },
    /// A shortest odd cycle, listed without repeating the first node.
    NotBipartite { odd_cycle: Vec<NodeId> },
}

impl Bipartiteness {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartiteness::Bipartite { .. })
    }
}

struct Bfs {
    dist: Vec<Option<usize>>,
    parent: Vec<Option<NodeId>>,
}

fn bfs(g: &Graph, source: NodeId) -> Bfs {
    let n = g.node_count();
    let mut dist = vec![None; n];
    let mut parent = vec![None; n];
    let mut queue = VecDeque::new();
    dist[source] = Some(0);
    queue.push_back(source);
    while let Some(v) = queue.pop_front() {
        let next = dist[v].unwrap() + 1;
        for &w in g.neighbors(v) {
            if dist[w].is_none() {
                dist[w] = Some(next);
                parent[w] = Some(v);
                queue.push_back(w);
            }
        }
    }
    Bfs { dist, parent }
}

/// BFS layers and eccentricity of `source`. Rejects disconnected graphs.
pub fn distance_profile(g: &Graph, source: NodeId) -> Result<DistanceProfile> {
    g.check_node(source)?;
    let Bfs { dist, .. } = bfs(g, source);
    let dist: Vec<usize> = dist
        .into_iter()
        .collect::<Option<_>>()
        .ok_or(crate::Error::Disconnected)?;
    let eccentricity = dist.iter().copied().max().unwrap_or(0);
    let mut layers = vec![Vec::new(); eccentricity + 1];
    for (v, &d) in dist.iter().enumerate() {
        layers[d].push(v);
    }
    Ok(DistanceProfile { source, dist, layers, eccentricity })
}

/// Largest eccentricity over all nodes. Rejects disconnected graphs.
pub fn diameter(g: &Graph) -> Result<usize> {
    g.require_connected()?;
    let mut best = 0;
    for v in 0..g.node_count() {
        best = best.max(distance_profile(g, v)?.eccentricity);
    }
    Ok(best)
}

/// BFS 2-colouring of every component, with a shortest odd cycle as the
/// counter-witness when the colouring fails.
pub fn is_bipartite(g: &Graph) -> Bipartiteness {
    let n = g.node_count();
    let mut color: Vec<Option<u8>> = vec![None; n];
    let mut conflict = None;
    for root in 0..n {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(0);
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            let c = color[v].unwrap();
            for &w in g.neighbors(v) {
                match color[w] {
                    None => {
                        color[w] = Some(1 - c);
                        queue.push_back(w);
                    }
                    Some(cw) if cw == c && conflict.is_none() => conflict = Some(root),
                    Some(_) => {}
                }
            }
        }
    }
    match conflict {
        None => Bipartiteness::Bipartite {
            coloring: color.into_iter().map(Option::unwrap).collect(),
        },
        Some(component_root) => Bipartiteness::NotBipartite {
            odd_cycle: shortest_odd_cycle(g, component_root),
        },
    }
}

// BFS from every node of the component; an edge between two nodes on the same
// layer closes an odd walk of length 2 * layer + 1 through the root. The
// shortest such walk over all roots is a simple cycle.
fn shortest_odd_cycle(g: &Graph, component_root: NodeId) -> Vec<NodeId> {
    let component = bfs(g, component_root).dist;
    let mut best: Option<(usize, NodeId, NodeId, NodeId)> = None;
    for root in (0..g.node_count()).filter(|&v| component[v].is_some()) {
        let Bfs { dist, .. } = bfs(g, root);
        for &(u, v) in g.edges() {
            if let (Some(du), Some(dv)) = (dist[u], dist[v]) {
                if du == dv && best.is_none_or(|(len, ..)| 2 * du + 1 < len) {
                    best = Some((2 * du + 1, root, u, v));
                }
            }
        }
    }
    let (_, root, u, v) = best.expect("component contains an odd cycle");
    let Bfs { parent, .. } = bfs(g, root);
    let chain = |mut x: NodeId| {
        let mut out = vec![x];
        while let Some(p) = parent[x] {
            out.push(p);
            x = p;
        }
        out
    };
    let mut cycle = chain(u);
    cycle.reverse();
    let mut back = chain(v);
    back.pop();
    cycle.extend(back);
    cycle
}

/// Equidistantly-connected nodes relative to `source`.
pub fn ec_nodes(g: &Graph, source: NodeId) -> Result<EcReport> {
    let profile = distance_profile(g, source)?;
    let witness_edges: Vec<_> = g
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| profile.dist[u] == profile.dist[v])
        .collect();
    let mut ec = vec![false; g.node_count()];
    for &(u, v) in &witness_edges {
        ec[u] = true;
        ec[v] = true;
    }
    Ok(EcReport {
        source,
        ec_nodes: (0..g.node_count()).filter(|&v| ec[v]).collect(),
        witness_edges,
    })
}
