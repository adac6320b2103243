//! Command-line front end for `ndl-core`.
//!
//! Exit codes: 0 success, 1 malformed configuration, 2 unparsable input,
//! 3 disconnected input, 4 bound or uniqueness violation found by `verify`.

pub mod args;
pub mod commands;
pub mod output;

pub use args::Cli;
pub use commands::{run, CliError, Outcome};
