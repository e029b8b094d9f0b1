//! Error type shared across the crate.

/// Crate-wide error enumeration. CLI exit codes are derived from these
/// variants (see the binary entry point).
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("undefined metric: {0}")]
    UndefinedMetric(String),

    /// Iterative solver diverged; carries the objective/residual trace
    /// collected up to the failure.
    #[error("solver failure: {message}")]
    SolverFailure { message: String, trace: Vec<f64> },

    /// An upstream artifact changed after its manifest was written.
    #[error("stale input: {0}")]
    StaleInput(String),

    #[error("config error: {0}")]
    Config(String),

    #[error("format error: {0}")]
    Format(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    pub fn dims(msg: impl Into<String>) -> Self {
        Error::DimensionMismatch(msg.into())
    }
}
