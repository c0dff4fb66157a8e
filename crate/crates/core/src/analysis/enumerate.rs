//! Labeled graph enumeration by adjacency bitmask.
//!
//! Bit `k` of a mask selects the `k`-th unordered pair `(u, v)`, `u < v`, in
//! lexicographic order, so every mask in `0..2^(n(n-1)/2)` is one labeled
//! simple graph on `n` nodes.

use alloc::vec::Vec;

use crate::graph::{Graph, NodeId};

/// Largest node count whose pairs fit in a `u64` mask.
pub const MAX_MASK_NODES: usize = 11;

pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Number of masks for `n` nodes.
pub fn mask_count(n: usize) -> u64 {
    1u64 << pair_count(n)
}

/// Dense adjacency rows for a small graph; row `v` has bit `w` set when
/// `{v, w}` is an edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MaskGraph {
    n: usize,
    mask: u64,
    rows: [u16; MAX_MASK_NODES],
}

impl MaskGraph {
    pub fn from_mask(n: usize, mask: u64) -> Self {
        assert!((1..=MAX_MASK_NODES).contains(&n), "mask graphs support 1..=11 nodes");
        let mut rows = [0u16; MAX_MASK_NODES];
        let mut bit = 0;
        for u in 0..n {
            for v in u + 1..n {
                if mask >> bit & 1 == 1 {
                    rows[u] |= 1 << v;
                    rows[v] |= 1 << u;
                }
                bit += 1;
            }
        }
        MaskGraph { n, mask, rows }
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn edge_count(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn edges(&self) -> Vec<(NodeId, NodeId)> {
        (0..self.n)
            .flat_map(|u| (u + 1..self.n).map(move |v| (u, v)))
            .filter(|&(u, v)| self.rows[u] >> v & 1 == 1)
            .collect()
    }

    fn all(&self) -> u16 {
        ((1u32 << self.n) - 1) as u16
    }

    fn expand(&self, frontier: u16) -> u16 {
        let mut out = 0;
        let mut bits = frontier;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            out |= self.rows[v];
            bits &= bits - 1;
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = 1u16;
        let mut frontier = 1u16;
        while frontier != 0 {
            frontier = self.expand(frontier) & !seen;
            seen |= frontier;
        }
        seen == self.all()
    }

    /// Eccentricity of `v`; only meaningful on connected graphs.
    pub fn eccentricity(&self, v: NodeId) -> usize {
        let mut seen = 1u16 << v;
        let mut frontier = seen;
        let mut depth = 0;
        loop {
            frontier = self.expand(frontier) & !seen;
            if frontier == 0 {
                return depth;
            }
            seen |= frontier;
            depth += 1;
        }
    }

    pub fn diameter(&self) -> usize {
        (0..self.n).map(|v| self.eccentricity(v)).max().unwrap_or(0)
    }

    pub fn to_graph(&self) -> Graph {
        Graph::new(self.n, self.edges()).expect("mask edges are simple and in range")
    }
}

/// Connected labeled graphs among the masks in `masks`.
pub fn connected_graphs(n: usize, masks: core::ops::Range<u64>) -> impl Iterator<Item = MaskGraph> {
    masks
        .map(move |mask| MaskGraph::from_mask(n, mask))
        .filter(MaskGraph::is_connected)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bit_order_is_lexicographic() {
        let g = MaskGraph::from_mask(4, 0b100101);
        // bits 0, 2, 5 -> (0,1), (0,3), (2,3)
        assert_eq!(g.edges(), alloc::vec![(0, 1), (0, 3), (2, 3)]);
        assert!(g.is_connected());
        assert_eq!(g.diameter(), 3);
        assert_eq!(g.eccentricity(0), 2);
    }

    #[test]
    fn matches_graph_oracles() {
        for mask in 0..mask_count(5) {
            let m = MaskGraph::from_mask(5, mask);
            let g = m.to_graph();
            assert_eq!(m.is_connected(), g.is_connected());
            if g.is_connected() {
                assert_eq!(m.diameter(), crate::graph::diameter(&g).unwrap());
            }
        }
    }

    #[test]
    fn small_counts() {
        // Connected labeled graphs on 1..=4 nodes: 1, 1, 4, 38.
        let counts: Vec<usize> =
            (1..=4).map(|n| connected_graphs(n, 0..mask_count(n)).count()).collect();
        assert_eq!(counts, alloc::vec![1, 1, 4, 38]);
    }
}
