use alloc::string::String;

/// Errors raised by the library operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(String),
    #[error("vertex index {0} is not a vertex of the graph")]
    UnknownVertex(usize),
    #[error("unknown vertex label {0:?}")]
    UnknownLabel(String),
    #[error("{0}{1} is not an edge of the graph")]
    NotAnEdge(String, String),
    #[error("operation needs at least {needed} vertices, graph has {actual}")]
    TooFewVertices { needed: usize, actual: usize },
    #[error("not a partition of the vertex set into modules: {0}")]
    NotAModulePartition(&'static str),
    #[error("vertex {0} lies inside the multiplex span")]
    VertexInSpan(String),
    #[error("orientation does not match the graph's edge set: {0}")]
    OrientationMismatch(&'static str),
    #[error("orientation is not transitive")]
    NotTransitive,
    #[error("missing or invalid choice at decomposition node {0:?}")]
    BadChoice(alloc::vec::Vec<usize>),
    #[error("prime node {0:?} has no transitive orientation")]
    NotOrientable(alloc::vec::Vec<usize>),
    #[error("probability must lie in [0, 1]")]
    InvalidProbability,
    #[error("oracle refused: {what} is {actual}, limit is {limit}")]
    OracleScale {
        what: &'static str,
        actual: usize,
        limit: usize,
    },
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
