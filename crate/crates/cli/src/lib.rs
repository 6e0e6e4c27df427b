//! Command-line driver for the `ararank` library: argument parsing, the
//! command implementations and the report they print.

pub mod commands;
pub mod report;

pub use commands::{run, Cli, CliError, Outcome, EXIT_BUDGET, EXIT_OK, EXIT_ORACLE, EXIT_REJECTED, EXIT_USAGE};
pub use report::Report;
