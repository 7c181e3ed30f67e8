use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad files, arguments or data. Exit code 1.
    #[error("{0}")]
    Input(String),

    /// An engine rejected the job. Exit code 2.
    #[error("{stage}: {source}")]
    Engine {
        stage: &'static str,
        #[source]
        source: fuzzadapt_core::Error,
    },
}

impl CliError {
    pub fn input(msg: impl Into<String>) -> Self {
        CliError::Input(msg.into())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 1,
            CliError::Engine { .. } => 2,
        }
    }
}

/// Attaches a stage name to engine errors.
pub trait Stage<T> {
    fn stage(self, stage: &'static str) -> Result<T, CliError>;
}

impl<T> Stage<T> for fuzzadapt_core::Result<T> {
    fn stage(self, stage: &'static str) -> Result<T, CliError> {
        self.map_err(|source| CliError::Engine { stage, source })
    }
}
