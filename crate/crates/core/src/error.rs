use thiserror::Error;

/// Errors produced by graph construction, search and parsing.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph with {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("graph would have {requested} vertices, above the limit of {limit}")]
    SizeGuard { requested: usize, limit: usize },

    /// The search ran out of its node budget before reaching a verdict.
    #[error("search budget exhausted after {nodes} nodes")]
    Exhausted { nodes: u64 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("vertex set is not independent")]
    NotIndependent,

    /// A construction produced an object that fails validation. This is a
    /// potential counterexample to the statement the construction encodes.
    #[error("counterexample candidate: {0}")]
    Counterexample(String),

    #[error("invalid colouring: {0}")]
    InvalidColoring(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
