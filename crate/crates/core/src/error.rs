use thiserror::Error;

/// Errors raised by the graph, model, solver and analysis layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Input outside an operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// Brute-force construction would exceed the configured vertex cap.
    #[error("resource limit: {requested} vertices exceeds the brute-force cap of {cap}")]
    Resource { requested: u128, cap: usize },

    /// Jacobi sweeps ran out before the off-diagonal mass vanished.
    #[error(
        "eigensolver did not converge after {sweeps} sweeps (off-diagonal residual {residual:e})"
    )]
    Convergence { sweeps: usize, residual: f64 },

    /// The critical jumping-rate search found no sign change.
    #[error("critical rate search failed: {0}")]
    Search(String),

    /// A closed-form expression hit a vanishing denominator.
    #[error("singular expression: {0}")]
    Singular(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
