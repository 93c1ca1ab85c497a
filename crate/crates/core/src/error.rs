use thiserror::Error;

use crate::degree::DegreeParseError;
use crate::model::Violation;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("relation is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("relation is not a fuzzy equivalence: {0}")]
    NotEquivalence(String),
    #[error("gamma must lie in (0,1], got {0}")]
    InvalidGamma(String),
    #[error("invalid interpretation: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    InvalidInterpretation(Vec<Violation>),
    #[error("invalid signature: {0}")]
    InvalidSignature(String),
    #[error("signature mismatch: {0}")]
    SignatureMismatch(String),
    #[error(transparent)]
    Degree(#[from] DegreeParseError),
    #[error("{0}")]
    Format(#[from] crate::format::FormatError),
    #[error("{0}")]
    Concept(#[from] crate::concepts::ParseError),
    #[error("infeasible generator parameters: {0}")]
    Infeasible(String),
    #[error("trace does not match result: {0}")]
    TraceMismatch(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
