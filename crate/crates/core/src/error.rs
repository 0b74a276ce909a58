use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("characteristic {characteristic} unsupported for dimension {dim} (need 0 or p > max(3, dim))")]
    UnsupportedCharacteristic { characteristic: u64, dim: usize },

    #[error("structure constants are not associative at basis triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),

    #[error("declared unit does not act as a two-sided identity")]
    BadUnit,

    #[error("subspace is not a {0} ideal")]
    NotAnIdeal(&'static str),

    #[error("not split over base field: {0}")]
    NotSplit(String),

    #[error("element is not in the radical")]
    NotInRadical,

    #[error("{0} is not idempotent")]
    NotIdempotent(&'static str),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("not an inner ideal: {0}")]
    NotInnerIdeal(String),

    #[error("not regular: {0}")]
    NotRegular(String),

    #[error("reduction failed at radical layer {layer}: {detail}\n--- reproduction ---\n{repro}")]
    ReductionFailed {
        layer: usize,
        detail: String,
        repro: String,
    },

    #[error("theorem check `{check}` violated: {detail}\n--- reproduction ---\n{repro}")]
    TheoremViolation {
        check: String,
        detail: String,
        repro: String,
    },

    #[error("invalid bimodule spec: {0}")]
    InvalidSpec(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
