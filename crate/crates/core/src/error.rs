use thiserror::Error;

/// Errors raised while building or analysing an instance.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A domain invariant was violated. `field` names the offending input.
    #[error("invalid {field}: {message}")]
    Validation { field: String, message: String },

    #[error("dimension mismatch: {what} has length {found}, expected {expected}")]
    DimensionMismatch {
        what: String,
        expected: usize,
        found: usize,
    },

    #[error("component index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("malformed sheaf `{label}`: {message}")]
    MalformedSheaf { label: String, message: String },

    #[error("invalid polarization: {0}")]
    InvalidPolarization(String),

    /// Structured text could not be read as an instance file.
    #[error("parse error: {0}")]
    Parse(String),

    /// An internal cross-check between two independent computations failed.
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

impl Error {
    pub(crate) fn validation(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Validation {
            field: field.into(),
            message: message.into(),
        }
    }

    pub(crate) fn mismatch(what: impl Into<String>, expected: usize, found: usize) -> Self {
        Error::DimensionMismatch {
            what: what.into(),
            expected,
            found,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
