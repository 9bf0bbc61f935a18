use thiserror::Error;

/// Errors produced by partition and orbit computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("size mismatch in {context}: expected {expected}, found {found}")]
    SizeMismatch {
        context: &'static str,
        expected: u64,
        found: u64,
    },

    #[error("partition {partition} is not of type {group}")]
    TypeMismatch { partition: String, group: String },

    #[error("{op} is undefined on the empty partition")]
    EmptyPartition { op: &'static str },

    #[error("no {kind} partition of size {size} dominates {partition}")]
    NoDominatingPartition {
        kind: &'static str,
        size: u64,
        partition: String,
    },

    #[error("extremum is not unique in {context}: {first} and {second} are incomparable")]
    AmbiguousExtremum {
        context: &'static str,
        first: String,
        second: String,
    },

    #[error("parse error at `{token}`: {reason}")]
    Parse { token: String, reason: String },

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub fn parse(token: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            token: token.into(),
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
