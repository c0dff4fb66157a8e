use std::process::ExitCode;

use amnesiac::cli::{execute, Cli};
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse();
    ExitCode::from(execute(&cli).code())
}
