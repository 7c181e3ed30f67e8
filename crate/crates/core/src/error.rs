use thiserror::Error;

/// Errors produced by the model engines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, got {actual}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        actual: usize,
    },

    #[error("matrix must have at least one row and one column (got {rows}x{cols})")]
    EmptyMatrix { rows: usize, cols: usize },

    #[error("matrix data has {actual} entries, expected {rows}x{cols}")]
    BadShape { rows: usize, cols: usize, actual: usize },

    #[error("value {value} at position {index} is not in the {alphabet} alphabet")]
    OutsideAlphabet { value: i64, index: usize, alphabet: &'static str },

    #[error("entry {value} at ({row}, {col}) is outside the allowed range {range}")]
    EntryOutOfRange { row: usize, col: usize, value: f64, range: String },

    #[error("{what} must be in [0, 1], got {value}")]
    UnitIntervalViolation { what: &'static str, value: f64 },

    #[error("negative divisor {value} for row {row}")]
    NegativeDivisor { row: usize, value: f64 },

    #[error("empty input: {0}")]
    Empty(&'static str),

    #[error("no node is switched on in the initial state vector")]
    NoActiveNode,

    #[error("model has {nodes} nodes in total, above the supported limit of {limit}")]
    TooManyNodes { nodes: usize, limit: usize },

    #[error("label mismatch: {0}")]
    LabelMismatch(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("dynamics did not settle within {limit} half-steps")]
    NotConverged { limit: u64 },

    #[error("no transformation registered from {from} to {to}")]
    NoTransform { from: String, to: String },
}

pub type Result<T> = std::result::Result<T, Error>;
