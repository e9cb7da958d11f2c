use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised while parsing graph6 or H-matrix text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("graph6: byte {offset}: {msg}")]
    Graph6 { offset: usize, msg: String },
    #[error("H-matrix: header: {msg}")]
    HHeader { msg: String },
    #[error("H-matrix: row {row}: {msg}")]
    HMatrix { row: usize, msg: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("size limit exceeded: {what} = {got}, limit {limit}")]
    LimitExceeded {
        what: &'static str,
        got: usize,
        limit: usize,
    },
    #[error("invalid ear decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("hypothesis not satisfied: {0}")]
    NotApplicable(String),
    #[error("threshold search reached cutoff k = {cutoff} without success")]
    CutoffExceeded { cutoff: usize },
    #[error("input line {line}: {source}")]
    Ingest { line: usize, source: ParseError },
    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
