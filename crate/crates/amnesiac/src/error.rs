use std::path::PathBuf;

use crate::edge_list::ParseError;

/// Process exit codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[repr(u8)]
pub enum ExitStatus {
    Success = 0,
    Violation = 1,
    InputError = 2,
    CycleDetected = 3,
    Exhausted = 4,
}

impl ExitStatus {
    pub fn code(self) -> u8 {
        self as u8
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {}: {source}", path.display())]
    Read { path: PathBuf, source: std::io::Error },

    #[error("cannot write {}: {source}", path.display())]
    Write { path: PathBuf, source: std::io::Error },

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("unknown node {0:?}")]
    UnknownNode(String),

    #[error("{0}")]
    BadArgument(String),

    #[error(transparent)]
    Core(#[from] amnesiac_core::Error),
}

impl CliError {
    pub fn exit_status(&self) -> ExitStatus {
        use amnesiac_core::Error as E;
        match self {
            CliError::Core(
                E::NonTermination { .. }
                | E::TerminationBoundExceeded { .. }
                | E::MultiplicityExceeded { .. }
                | E::ConfigurationMismatch { .. }
                | E::UnfairSchedule { .. }
                | E::UnknownHeldMessage { .. },
            ) => ExitStatus::Violation,
            _ => ExitStatus::InputError,
        }
    }
}
