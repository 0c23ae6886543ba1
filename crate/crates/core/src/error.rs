use thiserror::Error;

/// Errors raised while building ensembles, fitting approximations or
/// evaluating bounds.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("probability list is empty")]
    EmptyEnsemble,

    #[error("probability at index {index} is {value}, expected a finite value in [0, 1]")]
    InvalidProbability { index: usize, value: f64 },

    #[error("unknown generator kind `{0}` (supported: uniform-spread)")]
    UnknownGenerator(String),

    #[error("invalid parameter {name} = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("degenerate ensemble: {0}")]
    Degenerate(String),

    #[error("fit out of range: {0}")]
    FitOutOfRange(String),

    #[error("ensemble too large for enumeration: m = {m}, limit is {limit}")]
    TooLarge { m: usize, limit: usize },

    #[error("likelihood domain error: {0}")]
    Domain(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
