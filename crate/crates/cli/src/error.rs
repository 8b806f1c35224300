use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Invalid or unreadable job description; nothing has been written.
    #[error("{0}")]
    Config(String),
    #[error("{context}: {source}")]
    Compute {
        context: String,
        #[source]
        source: numrange::Error,
    },
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn compute(context: impl Into<String>) -> impl FnOnce(numrange::Error) -> Self {
        let context = context.into();
        move |source| Self::Compute { context, source }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            Self::Config(_) => 2,
            Self::Compute { .. } | Self::Io { .. } => 3,
        }
    }
}
