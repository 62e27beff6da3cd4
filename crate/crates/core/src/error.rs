use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("dimension m = {0} is outside the supported range 1..=16")]
    UnsupportedDimension(usize),

    #[error("m must be odd (got m = {0})")]
    EvenDimension(usize),

    #[error("polynomial is not monogenic")]
    NotMonogenic,

    #[error("polynomial is zero")]
    ZeroPolynomial,

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("alpha = {0} is excluded: alpha must avoid {{-1, -2, ..., -k-(m-1)/2}}")]
    ForbiddenAlpha(f64),

    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("unknown identifier `{name}` at offset {offset}")]
    UnknownIdentifier { offset: usize, name: String },

    #[error("pole: {0}")]
    Pole(String),

    #[error("branch cut hit: {0}")]
    BranchCut(String),

    #[error("domain error: {0}")]
    Domain(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
