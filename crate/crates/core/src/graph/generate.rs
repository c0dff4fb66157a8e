use alloc::format;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Graph, NodeId};
use crate::{Error, Result};

/// Named graph families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedGraph {
    /// `k`-dimensional hypercube on `2^k` nodes.
    Hypercube(u32),
    /// Outer cycle `0..5`, inner pentagram `5..10`, spokes `i <-> i + 5`.
    Petersen,
    Cycle(usize),
    Path(usize),
    Complete(usize),
}

impl Graph {
    pub fn named(kind: NamedGraph) -> Result<Self> {
        let too_small = |what: &str, min: usize| {
            Err(Error::InvalidParameter(format!("{what} needs a parameter of at least {min}")))
        };
        match kind {
            NamedGraph::Hypercube(k) => {
                if k == 0 {
                    return too_small("hypercube", 1);
                }
                if k > 20 {
                    return Err(Error::InvalidParameter(format!("hypercube dimension {k} is too large")));
                }
                let n = 1usize << k;
                let edges = (0..n).flat_map(|v| {
                    (0..k).map(move |bit| (v, v ^ (1 << bit))).filter(|&(u, w)| u < w)
                });
                Graph::new(n, edges)
            }
            NamedGraph::Petersen => {
                let outer = (0..5).map(|i| (i, (i + 1) % 5));
                let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
                let spokes = (0..5).map(|i| (i, i + 5));
                Graph::new(10, outer.chain(inner).chain(spokes))
            }
            NamedGraph::Cycle(n) => {
                if n < 3 {
                    return too_small("cycle", 3);
                }
                Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
            }
            NamedGraph::Path(n) => {
                if n < 2 {
                    return too_small("path", 2);
                }
                Graph::new(n, (1..n).map(|i| (i - 1, i)))
            }
            NamedGraph::Complete(n) => {
                if n < 2 {
                    return too_small("complete graph", 2);
                }
                Graph::new(n, pairs(n))
            }
        }
    }

    /// Erdős–Rényi `G(n, p)`.
    ///
    /// Pairs `(u, v)` with `u < v` are visited in lexicographic order and each
    /// is kept with probability `p`, drawing from ChaCha8 seeded through
    /// `SeedableRng::seed_from_u64(seed)`. ChaCha8 output is fixed by its
    /// specification, so a given `(n, p, seed)` yields the same graph on
    /// every platform.
    pub fn random(n: usize, p: f64, seed: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("random graph needs n >= 1".into()));
        }
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidParameter(format!("edge probability {p} is outside [0, 1]")));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let edges: Vec<_> = pairs(n).filter(|_| rng.random_bool(p)).collect();
        Graph::new(n, edges)
    }
}

fn pairs(n: usize) -> impl Iterator<Item = (NodeId, NodeId)> {
    (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
}
