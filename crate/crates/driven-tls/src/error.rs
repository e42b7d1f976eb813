//! Error types shared across the crate.

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors produced by solvers, propagators and analysis routines.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Input data violates a structural precondition (sampling density,
    /// record length, non-uniform grid, ...).
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An iterative solve failed to reach its tolerance. Carries a coarse
    /// residual profile over the search interval for diagnosis.
    #[error("convergence failure: {message}")]
    Convergence {
        message: String,
        /// Samples of (candidate, residual) over the search interval.
        residual_profile: Vec<(f64, f64)>,
    },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
