//! Front-end error type; every variant maps to exit code 2.

use thiserror::Error;

/// Errors surfaced to the terminal as `error: {message}`.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Lib(#[from] caplab::Error),
    #[error("failed to read {path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("failed to write {path}: {source}")]
    Write {
        path: String,
        source: std::io::Error,
    },
    /// Malformed document: syntax (with line/column context from the
    /// parser) or a missing/mistyped field.
    #[error("{0}")]
    Document(String),
    #[error("{0}")]
    Usage(String),
}
