use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Failures raised by the numerical layers.
///
/// The command-line front end maps each variant onto its own exit code, so new
/// variants should be added with that mapping in mind (see `cli::exit_code`).
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// Evaluation at a singular point of a closed-form expression.
    #[error("singular point: {0}")]
    Singularity(String),

    /// A computed dissipation came out negative for a passive network.
    #[error("passivity violation: {0}")]
    Passivity(String),

    /// A root, crossing or mode could not be located inside its search window.
    #[error("search failed: {0}")]
    Search(String),

    /// The requested design cannot be realized with non-negative components.
    #[error("infeasible design: {0}")]
    Infeasible(String),

    #[error("no convergence after {iterations} iterations (relative residuals: g {g_residual:.3e}, kappa/2chi {kappa_residual:.3e})")]
    NonConvergence {
        iterations: usize,
        g_residual: f64,
        kappa_residual: f64,
    },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

/// Rejects values that are not strictly positive and finite.
pub(crate) fn require_positive(name: &str, value: f64) -> Result<()> {
    if value.is_finite() && value > 0.0 {
        Ok(())
    } else {
        Err(Error::domain(format!("{name} must be positive and finite, got {value}")))
    }
}

pub(crate) fn require_non_negative(name: &str, value: f64) -> Result<()> {
    if value.is_finite() && value >= 0.0 {
        Ok(())
    } else {
        Err(Error::domain(format!("{name} must be non-negative and finite, got {value}")))
    }
}
