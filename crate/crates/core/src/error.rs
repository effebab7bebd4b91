use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("not a partition: {0:?} (parts must be positive and weakly decreasing)")]
    NotAPartition(Vec<usize>),
    #[error("pineapple clique size must be at least 1")]
    ZeroClique,
    #[error("graph is not connected")]
    NotConnected,
    #[error("weight map has {got} entries, graph has {expected} vertices")]
    DomainMismatch { expected: usize, got: usize },
    #[error("{what}: size {size} exceeds the limit {limit}")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("polynomial has constant term different from 1")]
    ConstantTermNotOne,
    #[error("two-variable polynomial is not symmetric at x^{i} y^{j}")]
    NotSymmetric { i: usize, j: usize },
    #[error("weight map is in case {got}, expected {expected}")]
    WrongCase { expected: String, got: String },
    #[error("weight map is not in the image of phi: {0}")]
    NotInImage(String),
    #[error("vertex {0} is not a leaf")]
    NotALeaf(usize),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
