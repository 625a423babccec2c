//! Command-line verification campaigns over the `pillai-core` solvers.
//!
//! Each subcommand builds a [`report::Report`]; exit codes are 0 for PASS, 1 for a
//! failed check, 2 for usage errors and 3 when certified mode is unavailable.

pub mod campaigns;
mod cli;
mod config;
pub mod error;
pub mod report;

pub use cli::{execute, Outcome};

/// Runs the CLI, printing its output; returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString>,
{
    let outcome = execute(args);
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    outcome.code
}
