//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("corpus line {line}: {reason}")]
    CorpusLine { line: usize, reason: String },

    #[error("unknown emotion label `{label}` (line {line}); not present in the training label set")]
    UnknownLabel { label: String, line: usize },

    #[error("commonsense cache miss for ({text:?}, {relation})")]
    CacheMiss { text: String, relation: String },

    #[error("empty input: {0}")]
    EmptyInput(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("token id {id} out of range for vocabulary of size {size}")]
    TokenIdRange { id: usize, size: usize },

    #[error("emotion label id {id} out of range ({count} labels)")]
    LabelIdRange { id: usize, count: usize },

    #[error("posterior path evaluated in inference mode")]
    PosteriorAtInference,

    #[error("graph vertex bound {bound} is below the structural minimum {min}")]
    GraphBound { bound: usize, min: usize },

    #[error("checkpoint version mismatch: file has {found}, this build reads {expected}")]
    Version { found: u32, expected: u32 },

    #[error("corrupt checkpoint: {0}")]
    Checkpoint(String),

    #[error("non-finite loss at step {step} ({context})")]
    NonFinite { step: usize, context: String },
}

impl Error {
    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }
}
