use std::path::PathBuf;

use thiserror::Error;

/// Errors surfaced by the library and the `vdo-bench` binary.
#[derive(Debug, Error)]
pub enum Error {
    #[error("configuration error: {0}")]
    Config(String),

    #[error("unknown problem `{0}`")]
    UnknownProblem(String),

    #[error("unknown optimizer `{0}`")]
    UnknownOptimizer(String),

    #[error("unsupported benchmark function: {0}")]
    UnsupportedFunction(String),

    #[error("data format error in {path}: {message}")]
    DataFormat { path: PathBuf, message: String },

    #[error("I/O error at {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("serialization error at {path}: {message}")]
    Serde { path: PathBuf, message: String },
}

impl Error {
    pub(crate) fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// Short category label, used for CLI diagnostics.
    pub fn category(&self) -> &'static str {
        match self {
            Error::Config(_) | Error::UnknownProblem(_) | Error::UnknownOptimizer(_) => "config",
            Error::UnsupportedFunction(_) => "unsupported",
            Error::DataFormat { .. } => "data",
            Error::Io { .. } => "io",
            Error::Serde { .. } => "serde",
        }
    }

    /// Process exit code for this error category.
    pub fn exit_code(&self) -> i32 {
        match self.category() {
            "config" => 2,
            "unsupported" | "data" => 3,
            "io" => 4,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
