use legendre_pade::Error;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Args(String),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("construction failed: {0}")]
    Construction(Error),

    #[error("quadrature failed: {0}")]
    Quadrature(Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } => 1,
            CliError::Construction(_) => 2,
            CliError::Quadrature(_) => 3,
            CliError::Args(_) => 4,
        }
    }

    pub fn io(path: impl std::fmt::Display, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.to_string(),
            source,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::NonConvergence { .. } => CliError::Quadrature(e),
            Error::InvalidParams(_) | Error::Domain { .. } | Error::InvalidSeries(_) => CliError::Args(e.to_string()),
            _ => CliError::Construction(e),
        }
    }
}
