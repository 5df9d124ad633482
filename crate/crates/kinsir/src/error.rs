//! Error types shared across the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, KinError>;

/// Errors raised by model construction and the numerical solvers.
#[derive(Debug, Error)]
pub enum KinError {
    /// A model parameter violates one of its hard invariants.
    #[error("invalid parameter: {0}")]
    InvalidParams(String),

    /// A density or initial condition cannot be represented on the grid.
    #[error("support outside domain: {0}")]
    SupportOutsideDomain(String),

    /// Argument outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The requested stationary state does not exist for these parameters.
    #[error("infeasible parameters: {0}")]
    Infeasible(String),

    /// The compartment has no inverse-Gamma quasi-equilibrium (degenerate diffusion).
    #[error("no quasi-equilibrium: {0}")]
    NoQuasiEquilibrium(String),

    /// A solver produced or received non-finite data.
    #[error("numerical failure at t = {time}: {message}")]
    Numerical { time: f64, message: String },

    /// Monte Carlo step size too large for the current frequency cap.
    #[error("probability overflow: dt = {dt} with frequency cap {kappa_max} gives dt*kappa > 1")]
    ProbabilityOverflow { dt: f64, kappa_max: f64 },

    /// Quadrature produced a non-finite result.
    #[error("quadrature failure: {0}")]
    Quadrature(String),

    /// Scenario file could not be parsed.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Scenario parsed but violates a module precondition.
    #[error("validation error: {0}")]
    Validation(String),

    /// File system failure while writing artifacts.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl KinError {
    /// Process exit code class: 2 = config, 3 = numerical, 4 = I/O.
    pub fn exit_code(&self) -> i32 {
        match self {
            KinError::Parse { .. } | KinError::Validation(_) | KinError::InvalidParams(_) => 2,
            KinError::Io(_) => 4,
            _ => 3,
        }
    }
}
