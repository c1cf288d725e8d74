use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity too small: a profile needs at least two parts, got {0}")]
    ArityTooSmall(usize),
    #[error("invalid part size {0}: every part needs at least one vertex")]
    InvalidPartSize(usize),
    #[error("profile too large: {0}")]
    ProfileTooLarge(String),
    #[error("invalid edge: {0}")]
    InvalidEdge(String),
    #[error("invalid vertex: {0}")]
    InvalidVertex(String),
    #[error("invalid coloring: {0}")]
    InvalidColoring(String),
    #[error("invalid matching: {0}")]
    InvalidMatching(String),
    #[error("construction undefined: {0}")]
    ConstructionUndefined(String),
    #[error("axis parts must have equal size (n_{a} = {na}, n_{b} = {nb})")]
    AxisMismatch { a: usize, b: usize, na: usize, nb: usize },
    #[error("canonicalization budget exceeded: group order {order} exceeds cap {cap}")]
    CanonicalizationBudget { order: u128, cap: u128 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid budget: {0}")]
    InvalidBudget(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Self::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Self::Parse(e.to_string())
    }
}
