use thiserror::Error;

/// Errors produced by hypergraph operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for hypergraph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge {edge} out of range for hypergraph with {m} edges")]
    EdgeOutOfRange { edge: usize, m: usize },
    #[error("operation undefined on the null hypergraph")]
    NullHypergraph,
    #[error("endpoints must be distinct (got {0} twice)")]
    SameEndpoints(usize),
    #[error("invalid vertex set: {0}")]
    InvalidVertexSet(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("malformed tree: {0}")]
    MalformedTree(String),
    #[error("{resource} budget of {limit} exhausted")]
    BudgetExceeded { resource: &'static str, limit: u64 },
    #[error("exhaustive search supports at most {limit} {what}, got {got}")]
    TooLarge { what: &'static str, limit: usize, got: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
