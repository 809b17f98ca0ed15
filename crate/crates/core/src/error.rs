use thiserror::Error;

/// Errors produced by the solver library.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument fell outside the domain of a function.
    #[error("domain error: {0}")]
    Domain(String),

    /// A truncated series ran out of terms before meeting its tolerance.
    #[error("series did not converge after {terms} terms (partial value {partial})")]
    Convergence { partial: f64, terms: usize },

    /// A precondition on step indices or grids was violated.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A sampled value or intermediate result was not finite.
    #[error("evaluation error: {0}")]
    Evaluation(String),

    /// An unknown system name was requested.
    #[error("unknown system `{0}`")]
    UnknownSystem(String),

    /// A run configuration could not be resolved.
    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
