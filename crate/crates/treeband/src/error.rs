use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("structural error: {0}")]
    Structure(String),
    #[error("size limit exceeded: {what} has {size}, limit {limit}")]
    SizeLimit {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("search budget of {0} exceeded")]
    Budget(u64),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("edge {0} {1} not in graph")]
    MissingEdge(usize, usize),
}

pub type Result<T> = std::result::Result<T, Error>;
