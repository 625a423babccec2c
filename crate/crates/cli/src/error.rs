use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("certification unavailable: {0}")]
    Certification(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 2,
            CliError::Certification(_) => 3,
        }
    }
}

impl From<pillai_core::Error> for CliError {
    fn from(e: pillai_core::Error) -> Self {
        match e {
            pillai_core::Error::CertificationUnavailable(m) => CliError::Certification(m),
            other => CliError::Usage(other.to_string()),
        }
    }
}
