use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Read { path: String, source: std::io::Error },

    #[error("cannot write {path}: {source}")]
    Write { path: String, source: std::io::Error },

    #[error("invalid config: {0}")]
    Config(String),

    #[error(transparent)]
    Library(#[from] gauss_sieve::Error),
}

impl CliError {
    /// Integrality failures are verification outcomes; everything else is a
    /// usage error.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Library(gauss_sieve::Error::NonIntegerWitness { .. })
            | CliError::Library(gauss_sieve::Error::NonIntegerCoefficient { .. }) => 2,
            _ => 1,
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Config(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
