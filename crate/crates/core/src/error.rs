use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("scalar {0} is not p-local for p = {1}")]
    InvalidScalar(String, u64),
    #[error("map is not well defined: {0}")]
    MapNotWellDefined(String),
    #[error("prime mismatch: {0} vs {1}")]
    PrimeMismatch(u64, u64),
    #[error("cannot compose: {0}")]
    CompositionError(String),
    #[error("input is not degreewise flat: {0}")]
    FlatnessViolation(String),
    #[error("invalid complex: {0}")]
    InvalidComplex(String),
    #[error("relations do not define a partial order: {0}")]
    NotAPoset(String),
    #[error("element not found: {0}")]
    ElementNotFound(String),
    #[error("map is not monotone: {0}")]
    NotMonotone(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("diagram is not functorial: {0}")]
    NotFunctorial(String),
    #[error("object is not in the crown subcategory: {0}")]
    NotInL(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
