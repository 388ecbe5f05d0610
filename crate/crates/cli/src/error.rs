use std::process::ExitCode;

use whitney::error::ErrorKind;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Schema(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Core(#[from] whitney::Error),
    /// The result was printed already; only the exit status is left.
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    pub fn schema(msg: impl Into<String>) -> Self {
        CliError::Schema(msg.into())
    }

    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            CliError::Schema(_) | CliError::Io { .. } => 2,
            CliError::Core(e) => match e.kind() {
                ErrorKind::Input => 2,
                ErrorKind::Cap => 3,
                ErrorKind::Precondition => 4,
            },
            CliError::Failed(_) => 1,
        })
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Schema(format!("invalid instance: {e}"))
    }
}

pub type CliResult<T> = Result<T, CliError>;
