use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input text. `line` is 1-based.
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },

    #[error("edge #{index} ({u}, {v}) is out of range for {n} vertices")]
    VertexOutOfRange {
        index: usize,
        u: u64,
        v: u64,
        n: usize,
    },

    #[error("unsupported format: {0}")]
    Unsupported(String),

    #[error("brute force is limited to {limit} vertices, graph has {n}")]
    TooLarge { n: usize, limit: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("manifest line {line}: {message}")]
    Manifest { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn format(line: usize, message: impl Into<String>) -> Self {
        Error::Format {
            line,
            message: message.into(),
        }
    }
}
