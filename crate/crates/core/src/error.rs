use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("part count must be at least 1")]
    ZeroParts,
    #[error("part sizes must all be positive (part {index} has size 0)")]
    EmptyPart { index: usize },
    #[error("K_r^+ needs a first part of size at least 2, got {0}")]
    FirstPartTooSmall(usize),
    #[error("edge count {m} out of range 0..={max} for {n} vertices")]
    EdgeCountOutOfRange { n: usize, m: u64, max: u64 },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),
}
