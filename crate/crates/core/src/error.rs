use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("malformed input: {0}")]
    Parse(String),
    #[error("presentation mismatch: {0}")]
    Presentation(String),
    #[error("homomorphism is not well defined: {0}")]
    IllDefined(String),
    #[error("index out of range: {0}")]
    Index(String),
    #[error("level {level} exceeds truncation {truncation}")]
    Truncation { level: usize, truncation: usize },
    #[error("enumeration budget of {budget} simplices exceeded")]
    Budget { budget: usize },
    #[error("invalid structure: {0}")]
    Invalid(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
