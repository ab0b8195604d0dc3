use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Errors produced by the library. Indices reported in edge errors are
/// 0-based positions in the input edge list.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("uniformity mismatch: expected {expected}, found {found}")]
    UniformityMismatch { expected: usize, found: usize },
    #[error("vertex count mismatch: expected {expected}, found {found}")]
    VertexCountMismatch { expected: usize, found: usize },
    #[error("invalid dimensions m={m} n={n}: need 1 <= m <= n")]
    InvalidDimensions { m: usize, n: usize },
    #[error("edge {0} is malformed")]
    MalformedEdge(usize),
    #[error("edges {0} and {1} are incomparable")]
    IncomparablePair(usize, usize),
    #[error("edges {0} and {1} are identical")]
    DuplicateEdge(usize, usize),
    #[error("{count} edges exceed the shift-chain bound m(n-m)+1 = {bound}")]
    BoundViolation { count: usize, bound: usize },
    #[error("invalid coordinate selection: {0}")]
    InvalidCoordinates(String),
    #[error("{what} {requested} exceeds the configured limit {limit}")]
    SizeLimit {
        what: &'static str,
        requested: u128,
        limit: u128,
    },
    #[error("infeasible request: {0}")]
    Infeasible(String),
    #[error("invalid coloring: {0}")]
    InvalidColoring(String),
    #[error("proper coloring needs edges with at least 2 vertices, uniformity is {0}")]
    UniformityTooSmall(usize),
    #[error("vertex {0} has zero or several true colors in the model")]
    AmbiguousVertex(u32),
    #[error("search oracles disagree: {0}")]
    OracleDisagreement(String),
    #[error("unknown coloring mode {0:?}; expected proper or polychromatic")]
    UnknownMode(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
