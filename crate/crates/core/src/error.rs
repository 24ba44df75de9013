use thiserror::Error;

/// Why an edge-list line was rejected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("expected two vertex labels")]
    Malformed,
    #[error("vertex labels must be positive integers")]
    NonPositiveLabel,
    #[error("loop edge")]
    LoopEdge,
    #[error("duplicate edge")]
    DuplicateEdge,
    #[error("vertex label exceeds declared count {0}")]
    LabelOutOfRange(usize),
    #[error("header must read `n <count>` with a positive count")]
    BadHeader,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {kind}")]
    Parse { line: usize, kind: ParseErrorKind },

    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),

    #[error("graph has no edges")]
    NoEdges,

    #[error("graphs are limited to {max} vertices, got {got}")]
    TooManyVertices { got: usize, max: usize },

    #[error("zero vector has no primitive normalization")]
    ZeroVector,

    #[error("generators span a cone of rank {rank} in dimension {dim}")]
    Degenerate { rank: usize, dim: usize },

    #[error("form is negative on generator {0}")]
    NotSupporting(String),

    #[error("toric ring is not normal: {0}")]
    NotNormal(String),

    #[error("graph is not connected")]
    Disconnected,

    #[error("{0:?} is not a vertex cover")]
    NotACover(Vec<usize>),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("no interior lattice point found with t-degree <= {cap}")]
    NoInteriorPoint { cap: i64 },

    #[error("coefficient does not fit in 64 bits")]
    Overflow,

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
