use thiserror::Error;

/// Errors produced by constructors, algorithms, and the file formats.
#[derive(Debug, Error)]
pub enum HgError {
    #[error("uniformity must be at least 2 (got {0})")]
    UniformityRange(usize),

    #[error("vertex count {0} exceeds the supported maximum of {1}")]
    TooManyVertices(usize, usize),

    #[error("vertex {vertex} out of range for a hypergraph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("edge {edge:?} has {got} vertices, expected {expected}")]
    EdgeSize {
        edge: Vec<usize>,
        got: usize,
        expected: usize,
    },

    #[error("duplicate edge {edge:?}")]
    DuplicateEdge { edge: Vec<usize> },

    #[error("edge {edge:?} is not present")]
    MissingEdge { edge: Vec<usize> },

    #[error("uniformity mismatch: {0} vs {1}")]
    UniformityMismatch(usize, usize),

    #[error("crossing-query parts must be pairwise disjoint")]
    OverlappingParts,

    #[error("crossing-query parts must be nonempty")]
    EmptyPart,

    #[error("parameter out of range: {0}")]
    ParameterRange(String),

    #[error("the two endpoints must differ")]
    IdenticalEndpoints,

    #[error("hypergraph has no vertex cut")]
    NoCut,

    #[error("vertex count {n} exceeds the brute-force ceiling {ceiling}")]
    CeilingExceeded { n: usize, ceiling: usize },

    #[error("edge universe of size {universe} exceeds the search limit {limit}")]
    UniverseTooLarge { universe: usize, limit: usize },

    #[error("not admissible: kappa-bar is {kappa_bar}, which exceeds k = {k}")]
    NotAdmissible { kappa_bar: usize, k: usize },

    #[error("precondition not met: {0}")]
    Precondition(String),

    #[error("{path}:{line}:{col}: {msg}")]
    Parse {
        path: String,
        line: usize,
        col: usize,
        msg: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, HgError>;
