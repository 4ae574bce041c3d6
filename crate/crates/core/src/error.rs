use thiserror::Error;

/// Errors raised across the crate.
///
/// Tableau coordinates are 1-based (row, column), counted from the top-left
/// cell. Growth-diagram coordinates are 0-based Cartesian (x to the right,
/// y upward), matching the way diagrams are drawn.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid tableau at row {row}, column {col}: {reason}")]
    Tableau {
        row: usize,
        col: usize,
        reason: String,
    },

    #[error("invalid chain step {index}: {reason}")]
    ChainStep { index: usize, reason: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("malformed cell: {0}")]
    MalformedCell(String),

    #[error("invalid filling at cell ({x}, {y}): {reason}")]
    Filling { x: usize, y: usize, reason: String },

    #[error("reconstruction failed at ({x}, {y}): {reason}")]
    Reconstruction { x: usize, y: usize, reason: String },

    #[error("region holds {ones} ones, oracle capacity is {limit}")]
    Capacity { ones: usize, limit: usize },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    pub(crate) fn precondition(message: impl Into<String>) -> Self {
        Error::Precondition(message.into())
    }
}
