use std::path::PathBuf;

use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("invalid modulus: {0}")]
    InvalidModulus(String),

    /// Vanishing denominator in the reciprocal relation: the vectors are dependent.
    #[error("degenerate configuration: {0}")]
    Degenerate(String),

    #[error("box of {requested} vectors exceeds the resource cap of {cap}")]
    ResourceCap { requested: u128, cap: u128 },

    /// An exactness assertion failed. Always a bug.
    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    /// Process exit code used by the command-line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidInput(_)
            | Error::InvalidModulus(_)
            | Error::Degenerate(_)
            | Error::Json(_) => 2,
            Error::ResourceCap { .. } => 3,
            Error::Invariant(_) => 4,
            Error::Io { .. } => 1,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
