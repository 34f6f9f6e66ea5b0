use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown graph family `{0}`")]
    UnknownGraph(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("vertex {vertex} is out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("{0:?} is not a zero forcing set")]
    NotZeroForcing(Vec<usize>),

    #[error("{0:?} is a zero forcing set, so no witness matrix exists")]
    IsZeroForcing(Vec<usize>),

    #[error("search too large: {0}")]
    SearchTooLarge(String),

    #[error("chain enumeration truncated: more than {limit} forcing chains")]
    ChainLimitExceeded { limit: usize },

    #[error("invalid forcing chain: {0}")]
    InvalidChain(String),

    #[error("pattern violation: pivot A[{by}][{on}] is zero")]
    PatternViolation { by: usize, on: usize },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("output error: {1}")]
    Io(std::io::ErrorKind, String),
}
