use thiserror::Error;

/// Errors produced by the engine.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An operation was applied outside its mathematical domain
    /// (division by zero, zero radicand, non-positive Möbius parameter, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// The caller asked for something the inputs do not support
    /// (wrong case, ineligible variant, unrationalized letter, ...).
    #[error("usage error: {0}")]
    Usage(String),

    /// Input text could not be parsed.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// A root of the polynomial lies on an endpoint of a Sturm interval.
    #[error("endpoint root: {0}")]
    EndpointRoot(String),

    /// A nested integral does not converge at its base point or endpoint.
    #[error("divergent integral: {0}")]
    Divergence(String),

    /// Numerical evaluation did not reach the requested tolerance.
    #[error("accuracy not reached: estimate {estimate} with error {error:e}")]
    Accuracy { estimate: f64, error: f64 },

    /// A generating-function node is outside the implemented rule alphabet.
    #[error("unsupported pattern: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
