use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{what} = {value} is outside the domain {domain}")]
    Domain {
        what: &'static str,
        value: f64,
        domain: &'static str,
    },

    #[error("log-gamma has a pole at z = {0}")]
    GammaPole(f64),

    #[error("{0} diverges at theta = 0")]
    Divergence(&'static str),

    #[error("invalid series: {0}")]
    InvalidSeries(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("series has {got} coefficients, construction needs at least {needed}")]
    InsufficientCoefficients { needed: usize, got: usize },

    #[error("denominator system is singular (condition estimate {condition_estimate:e})")]
    SingularSystem { condition_estimate: f64 },

    #[error("enforced-zero residual {residual:e} exceeds {limit:e} (condition estimate {condition_estimate:e})")]
    ResidualTooLarge {
        residual: f64,
        limit: f64,
        condition_estimate: f64,
    },

    #[error("approximant denominator vanishes at theta = {theta} (|Q| = {magnitude:e})")]
    PadePole { theta: f64, magnitude: f64 },

    #[error("{what} did not converge (estimate {estimate:e}, error {error:e})")]
    NonConvergence {
        what: &'static str,
        estimate: f64,
        error: f64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
