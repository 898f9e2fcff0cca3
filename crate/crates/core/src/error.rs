use std::path::PathBuf;

use thiserror::Error;

/// Error type shared by every module in the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("manifest {path}: {reason}")]
    Manifest { path: PathBuf, reason: String },

    #[error("{path}:{line}: {reason}")]
    Resource {
        path: PathBuf,
        line: usize,
        reason: String,
    },

    #[error("document {party} {year}: {reason}")]
    Document {
        party: String,
        year: i32,
        reason: String,
    },

    #[error("{0}")]
    Analytics(String),

    #[error("{0}")]
    Report(String),

    #[error("invalid configuration: {0}")]
    Config(String),
}

impl Error {
    pub(crate) fn resource(path: impl Into<PathBuf>, line: usize, reason: impl Into<String>) -> Self {
        Error::Resource {
            path: path.into(),
            line,
            reason: reason.into(),
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// True for errors caused by bad inputs or configuration rather than a
    /// failure while processing documents. CLI exit codes key off this.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Io { .. } | Error::Manifest { .. } | Error::Resource { .. } | Error::Config(_)
        )
    }
}
