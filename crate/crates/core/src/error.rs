use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Input bytes were not valid UTF-8.
    #[error("ingestion error: invalid UTF-8 at byte offset {offset}")]
    Ingest { offset: usize },

    #[error("lexicon {name}: duplicate word {word:?} on line {line}")]
    DuplicateWord { name: String, word: String, line: usize },

    #[error("lexicon {name}: line {line}: {reason}")]
    LexiconLine {
        name: String,
        line: usize,
        reason: String,
    },

    #[error("no sentences")]
    NoSentences,

    #[error("series shorter than window (n = {len}, window = {window})")]
    SeriesTooShort { len: usize, window: usize },

    #[error("arcs {left} and {right} have non-overlapping valid regions")]
    NonOverlapping { left: String, right: String },

    #[error("invalid parameter: {0}")]
    Param(String),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{}: {source}", path.display())]
    Json {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },

    #[error("{}: {source}", path.display())]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },
}

impl Error {
    pub fn param(msg: impl Into<String>) -> Self {
        Error::Param(msg.into())
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// Process exit code for the CLI: 2 for bad parameters or input, 1 for I/O.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Io { .. } | Error::Json { .. } | Error::Csv { .. } => 1,
            _ => 2,
        }
    }
}
