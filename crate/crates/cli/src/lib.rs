//! Library half of the `idealprox` binary: argument schema, input
//! parsing, report types and command dispatch. Report types derive both
//! `Serialize` and `Deserialize` so emitted JSON can be re-read.

pub mod args;
pub mod commands;
pub mod input;
pub mod output;

/// Parse and I/O failures exit 1 with a message on stderr; domain errors
/// exit 2 with a JSON error object on stdout.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Domain(idealprox::Error),
    #[error("i/o error: {0}")]
    Io(String),
}
