use alloc::boxed::Box;
use alloc::string::String;

use crate::graph::NodeId;
use crate::sync::Trace;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("node {node} is out of range for a graph on {node_count} nodes")]
    NodeOutOfRange { node: NodeId, node_count: usize },

    #[error("self-loop on node {0}")]
    SelfLoop(NodeId),

    #[error("graph is disconnected; flooding analysis requires a connected graph")]
    Disconnected,

    #[error("transmission {from}->{to} does not follow an edge of the graph")]
    NotAnEdge { from: NodeId, to: NodeId },

    #[error("configuration was built for {found} arcs but the graph has {expected}")]
    ConfigurationMismatch { expected: usize, found: usize },

    /// The synchronous engine failed to terminate within its budget. This
    /// contradicts the termination bound and carries the partial trace.
    #[error("synchronous flooding did not terminate within {max_rounds} rounds")]
    NonTermination { max_rounds: usize, trace: Box<Trace> },

    /// Flooding terminated, but only after the `2n + 1` bound.
    #[error("flooding ran until round {round}, past the bound of {bound}")]
    TerminationBoundExceeded {
        round: usize,
        bound: usize,
        trace: Box<Trace>,
    },

    /// A node showed up in three or more distinct round-sets.
    #[error("node {node} appears in {count} distinct round-sets")]
    MultiplicityExceeded {
        node: NodeId,
        count: usize,
        trace: Box<Trace>,
    },

    #[error("adversary held {from}->{to} at age {age}, past the hold cap of {hold_cap}")]
    UnfairSchedule {
        from: NodeId,
        to: NodeId,
        age: u32,
        hold_cap: u32,
    },

    #[error("adversary tried to hold {from}->{to}, which is not in flight")]
    UnknownHeldMessage { from: NodeId, to: NodeId },
}
