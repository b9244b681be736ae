use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("undefined for this input: {0}")]
    UndefinedInput(&'static str),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("degree sequence is not graphical")]
    NotGraphical,

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("unsupported model: {0}")]
    UnsupportedModel(String),

    #[error("usage: {0}")]
    Usage(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

impl Error {
    /// Process exit status for the command-line tool: 2 for usage and
    /// parameter errors, 1 for everything tied to the input data.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Usage(_) | Error::UnsupportedModel(_) | Error::InvalidParams(_) => 2,
            _ => 1,
        }
    }
}
