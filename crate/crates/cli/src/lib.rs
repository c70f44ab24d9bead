//! `bseq` command implementations. Every command renders to a `String`;
//! the binary only prints and maps errors to exit codes.

pub mod args;
pub mod commands;
pub mod config;
pub mod selftest;

use thiserror::Error;

pub use args::{Cli, Command};
pub use commands::{run, Outcome};
pub use config::CliConfig;

pub const EXIT_USER: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] bseq_core::Error),
    #[error("Io: {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("Usage: {0}")]
    Usage(String),
    /// A cross-check or self-test disagreed.
    #[error("CheckFailed: {0}")]
    Check(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_internal() => EXIT_INTERNAL,
            CliError::Check(_) => EXIT_INTERNAL,
            _ => EXIT_USER,
        }
    }
}
