use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{location}: {message}")]
    Format { location: String, message: String },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Algebra(#[from] tatebal::Error),
}

impl CliError {
    /// Every error the front end reports is an input problem.
    pub fn exit_code(&self) -> i32 {
        2
    }
}
