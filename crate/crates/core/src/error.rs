use thiserror::Error;

use crate::graph::{Parity, Violation};

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("malformed graph: {0:?}")]
    Malformed(Vec<Violation>),
    #[error("parity mismatch: expected {expected:?}, found {found:?}")]
    ParityMismatch { expected: Parity, found: Parity },
    #[error("{0} is not a contraction site of this graph")]
    InvalidSite(String),
    #[error("vector is not homogeneous in (order, degree)")]
    Inhomogeneous,
    #[error("operation requires {0:?} parity")]
    WrongParity(Parity),
    #[error("invalid face descriptor: {0}")]
    InvalidFace(String),
    #[error("invalid chord diagram: {0}")]
    InvalidDiagram(String),
    #[error("{0} is missing from the target basis")]
    NotInBasis(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Schema(String),
}

pub type Result<T> = std::result::Result<T, GraphError>;
