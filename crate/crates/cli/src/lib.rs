//! Serialization and rendering behind the `trihex` command.

pub mod document;
pub mod dot;
pub mod graph6;
pub mod svg;

use std::path::PathBuf;

use thiserror::Error;

pub use document::{FaceKind, FaceRecord, GraphDocument};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Library(#[from] trihex::Error),
    #[error("malformed graph document: {0}")]
    Document(String),
    #[error("cannot access {}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    /// A map that was asked to be checked did not pass.
    #[error("{0}")]
    CheckFailed(String),
}

impl CliError {
    /// 2 for bad input, 3 when a construction contradicts itself, 1 otherwise.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Document(_) => 2,
            CliError::Library(trihex::Error::Internal(_)) => 3,
            CliError::Library(_) => 2,
            CliError::Io { .. } | CliError::CheckFailed(_) => 1,
        }
    }
}
