//! File formats, JSON export, parallel sweeps and the command-line front end
//! for the `amnesiac-core` flooding engines.

pub mod cli;
pub mod edge_list;
mod error;
pub mod json;
pub mod parallel;

pub use error::{CliError, ExitStatus};
