use decomp::DecompError;
use oracle::OracleError;
use perm_core::PermError;

/// A failed command, sorted by exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Exit code 2.
    #[error("resource bound exceeded: {0}")]
    Resource(String),
    /// Exit code 3.
    #[error("invalid input: {0}")]
    Invalid(String),
    /// Exit code 1.
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Resource(_) => 2,
            CliError::Invalid(_) => 3,
            CliError::Failed(_) => 1,
        }
    }
}

impl From<PermError> for CliError {
    fn from(e: PermError) -> Self {
        match e {
            PermError::CosetBound { .. } => CliError::Resource(e.to_string()),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<DecompError> for CliError {
    fn from(e: DecompError) -> Self {
        match e {
            DecompError::Perm(p) => p.into(),
            DecompError::Internal(_) => CliError::Failed(e.to_string()),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::TooLarge { .. } | OracleError::LatticeTooLarge { .. } => CliError::Resource(e.to_string()),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<abelian::AbelianError> for CliError {
    fn from(e: abelian::AbelianError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<bilinear::BilinearError> for CliError {
    fn from(e: bilinear::BilinearError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<ring::RingError> for CliError {
    fn from(e: ring::RingError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Invalid(e.to_string())
    }
}
