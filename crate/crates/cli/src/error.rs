use std::io;
use std::path::PathBuf;

use thiserror::Error;

/// Failures that stop a command before it can produce a verdict.
#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] bkmult_core::Error),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
    #[error("{}:{line}: {message}", path.display())]
    Cache { path: PathBuf, line: usize, message: String },
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Config(String),
}

impl CliError {
    pub fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        CliError::Io { path: path.into(), source }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

/// Process exit codes.
pub mod exit {
    pub const PASS: i32 = 0;
    pub const VIOLATION: i32 = 1;
    pub const USAGE: i32 = 2;
}
