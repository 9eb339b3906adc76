use std::io;

use thiserror::Error;

/// Input and configuration errors; all of them exit with status 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Io(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{0}")]
    Graph(#[from] hyperterrain_core::Error),
    #[error("unknown vertex label {0}")]
    UnknownVertex(u64),
    #[error("{0}")]
    Config(String),
}

impl CliError {
    pub fn parse(line: usize, msg: impl Into<String>) -> CliError {
        CliError::Parse { line, msg: msg.into() }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}
