use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("shape mismatch: expected {expected}, found {found}")]
    ShapeMismatch { expected: usize, found: usize },
    #[error("ring presentation mismatch")]
    PresentationMismatch,
    #[error("constant term is not a unit of the coefficient domain")]
    NonUnit,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("vertex label `{0}` occurs in both complexes")]
    LabelClash(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("cochain is not a cocycle")]
    NotCocycle,
    #[error("involution has a fixed cell")]
    NonFreeInvolution,
    #[error("degree {requested} requested but cells exist only up to degree {available}")]
    InsufficientDegree { requested: usize, available: usize },
    #[error("resource cap exceeded: {what} ({count} > {limit})")]
    ResourceCap {
        what: &'static str,
        count: u128,
        limit: u128,
    },
    #[error("element is virtual; an honest sum of line bundles is required")]
    NotHonest,
    #[error("element has rank {0}; rank 0 is required")]
    NonzeroRank(i64),
    #[error("homotopy endpoints are not related by the reflection in the last coordinate")]
    ReflectionMismatch,
    #[error("family intersection is not closed under taking faces")]
    NotDownwardClosed,
    #[error("parse error: {0}")]
    Parse(String),
}
