use thiserror::Error;

/// Failure classes, each with its own process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Limit(String),
    #[error("invariant violation: {0}")]
    Violation(String),
    #[error(transparent)]
    Other(#[from] anyhow::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Limit(_) => 3,
            CliError::Violation(_) => 4,
            CliError::Other(_) => 1,
        }
    }
}

impl From<gbei_core::Error> for CliError {
    fn from(e: gbei_core::Error) -> Self {
        match e {
            gbei_core::Error::CapExceeded { .. } => CliError::Limit(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<gbei_algebra::Error> for CliError {
    fn from(e: gbei_algebra::Error) -> Self {
        match e {
            gbei_algebra::Error::Core(c) => c.into(),
            gbei_algebra::Error::Parse(_) => CliError::Usage(e.to_string()),
            // the oracle refuses the instance rather than guessing
            gbei_algebra::Error::CapExceeded { .. }
            | gbei_algebra::Error::Timeout { .. }
            | gbei_algebra::Error::NotSquarefree => CliError::Limit(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Other(e.into())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Other(e.into())
    }
}

pub type CliResult<T> = Result<T, CliError>;
