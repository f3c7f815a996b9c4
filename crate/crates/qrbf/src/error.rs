//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by network construction, training, and analysis routines.
#[derive(Debug, Error)]
pub enum Error {
    /// A vector argument did not have the dimension the operation requires.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// A parameter violated its domain constraint (e.g. a non-positive spread).
    #[error("invalid parameter {name}: {reason}")]
    InvalidParameter {
        name: &'static str,
        reason: String,
    },

    /// An operation that requires non-empty input received none.
    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    /// A q-derivative was requested at a point where it is undefined.
    #[error("q-derivative undefined: {0}")]
    UndefinedDerivative(&'static str),

    /// A non-finite value reached the weight update; the run is unusable.
    #[error("training diverged: {0}")]
    Divergence(String),

    /// A correlation matrix was too ill-conditioned to invert reliably.
    #[error("singular correlation matrix (condition estimate {condition:.3e})")]
    SingularMatrix { condition: f64 },

    /// Experiment configuration referenced something that does not exist
    /// or carried out-of-range values.
    #[error("invalid experiment config: {0}")]
    InvalidConfig(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn param(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }
}
