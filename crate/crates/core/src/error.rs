use thiserror::Error;

use crate::filtration::{Index, Space};

/// Input errors. Constraint violations are not errors; they are reported as
/// findings in a [`crate::VerificationReport`].
#[derive(Debug, Error)]
pub enum Error {
    #[error("negative dimension {dim} at {index}")]
    NegativeDimension { index: Index, dim: i64 },
    #[error("duplicate entry at {0}")]
    DuplicateEntry(Index),
    #[error("invalid space descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("unknown space tag `{0}`")]
    UnknownSpace(String),
    #[error("{operation} is not defined for space {space}")]
    UnsupportedSpace {
        space: Space,
        operation: &'static str,
    },
    #[error("no table supplied for {0}")]
    MissingTable(Space),
    #[error("no Z_{0} table supplied, but a subvariety constraint needs it")]
    MissingSubvariety(u32),
    #[error("tables disagree on the ambient dimension n ({0} vs {1})")]
    DimensionMismatch(u32, u32),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("invalid template: {0}")]
    InvalidTemplate(String),
    #[error("no non-negative solution: {0}")]
    Contradiction(String),
    #[error("grid: {0}")]
    Grid(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
