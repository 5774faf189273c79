use thiserror::Error;

use crate::multiindex::MultiIndex;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("label {label} has norm {norm}, expected {expected}")]
    NormMismatch {
        label: MultiIndex,
        norm: u64,
        expected: u64,
    },

    #[error("label {label} has length {len}, expected {expected}")]
    LabelLength {
        label: MultiIndex,
        len: usize,
        expected: usize,
    },

    #[error("expected {expected} coordinates, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("cannot compose: inner simplex has point dimension {inner_dim}, outer simplex has arity {outer_arity}")]
    CompositionArity { inner_dim: usize, outer_arity: usize },

    #[error("control net is missing label {0}")]
    MissingLabel(MultiIndex),

    #[error("duplicate label {0}")]
    DuplicateLabel(MultiIndex),

    #[error("control net has {got} points, expected {expected}")]
    PointCount { expected: u128, got: usize },

    #[error("invalid polygon: {0}")]
    InvalidPolygon(String),

    #[error("expected {expected} blossom arguments, got {got}")]
    BlossomArity { expected: usize, got: usize },

    #[error("point ({0}, {1}) lies outside the domain polygon")]
    OutsideDomain(f64, f64),

    #[error("singular evaluation: {0}")]
    Singular(String),

    #[error("integer overflow in combinatorial coefficient (degree too large)")]
    Overflow,

    #[error("invalid side index {index} for a {sides}-sided patch")]
    SideIndex { index: usize, sides: usize },

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("refused: {0}")]
    Refused(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for failures caused by numerical breakdown rather than bad input.
    pub fn is_numerical(&self) -> bool {
        matches!(self, Error::Singular(_) | Error::Overflow)
    }
}
