//! Amnesiac flooding on finite undirected graphs.
//!
//! Every node that receives the message forwards it to all of its neighbours
//! except the ones it just received it from, and then forgets the event. This
//! crate simulates that process in the synchronous model ([`sync`]) and in a
//! round-asynchronous model driven by an adversarial scheduler
//! ([`asynchronous`]), and provides the static oracles ([`graph`]) and
//! trace-level verifiers ([`analysis`]) that check the termination results.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, JSON export,
//! parallel sweeps and the command-line front end live in the `amnesiac`
//! companion crate.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod analysis;
pub mod asynchronous;
mod error;
pub mod graph;
pub mod sync;

pub use error::{Error, Result};
pub use graph::{Graph, NodeId};
