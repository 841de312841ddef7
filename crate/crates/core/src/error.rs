use thiserror::Error;

/// Errors raised by graph, complex and construction operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown graph kind `{0}`")]
    UnknownKind(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is empty")]
    EmptyGraph,
    #[error("{what} exceeded the budget of {limit}")]
    ResourceLimit { what: &'static str, limit: u64 },
    #[error("not a graph homomorphism: {0}")]
    NotHomomorphism(String),
    #[error("edge ({0}, {0}) is a loop")]
    LoopEdge(u32),
    #[error("({0}, {1}) is not an edge")]
    MissingEdge(u32, u32),
    #[error("map is not an involution")]
    NotInvolution,
    #[error("cell map is not order preserving")]
    NotOrderPreserving,
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("path length {0} is even")]
    EvenLength(usize),
    #[error("input graph has a loop")]
    LoopedInput,
    #[error("mismatched domains: {0}")]
    MismatchedDomains(String),
    #[error("input graph is bipartite")]
    BipartiteInput,
    #[error("not found within budget: {0}")]
    NotFound(String),
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
