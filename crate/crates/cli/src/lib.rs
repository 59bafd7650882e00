//! Library half of the `synchro` binary: the JSON document codec, the
//! verification report types, and the command implementations, kept
//! callable so integration tests can drive them without spawning a process.

pub mod commands;
pub mod document;
pub mod report;

/// Anything that ends the process with exit code 2: bad input, bad
/// documents, I/O problems, or a resource cap.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Core(#[from] synchro_core::Error),
    #[error("{0}")]
    Input(String),
    #[error("invalid document: {0}")]
    Document(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}
