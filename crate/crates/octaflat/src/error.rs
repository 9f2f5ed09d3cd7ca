use thiserror::Error;

/// Errors surfaced by mesh construction, solvers and field operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("mesh refinement failure: {0}")]
    Refinement(String),

    #[error("solver diverged: {0}")]
    Divergence(String),

    #[error("solver did not converge: residual {residual:.3e} after {iterations} iterations")]
    NoConvergence { residual: f64, iterations: usize },

    #[error("inadmissible parameters: {0}")]
    Inadmissible(String),

    #[error("path rejected: {0}")]
    PathRejected(String),

    #[error("linear solve failed: {0}")]
    LinearSolve(String),
}

pub type Result<T> = std::result::Result<T, Error>;
