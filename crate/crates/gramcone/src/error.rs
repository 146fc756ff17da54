//! Error type shared by all modules.

use thiserror::Error;

/// Errors produced by matrix, cone, and verifier operations.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// Operand shapes do not conform.
    #[error("dimension mismatch in {context}: expected {expected}, got {got}")]
    DimensionMismatch {
        context: &'static str,
        expected: String,
        got: String,
    },

    /// A weight matrix must be symmetric.
    #[error("weight matrix is not symmetric")]
    WeightNotSymmetric,

    /// A weight matrix must square to the identity.
    #[error("weight matrix is not involutory (W*W != I)")]
    WeightNotInvolutory,

    /// Invalid argument outside of dimension conformance.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Failure of a JSON document to parse into a domain value; `path`
    /// points into the document (e.g. `$.A[1][2]`).
    #[error("parse error at {path}: {message}")]
    Parse { path: String, message: String },

    /// An internal consistency check failed. This always signals a bug,
    /// never bad input.
    #[error("internal defect: {0}")]
    Defect(String),
}

impl Error {
    pub fn dims(context: &'static str, expected: impl Into<String>, got: impl Into<String>) -> Self {
        Error::DimensionMismatch {
            context,
            expected: expected.into(),
            got: got.into(),
        }
    }

    pub fn parse(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            path: path.into(),
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
