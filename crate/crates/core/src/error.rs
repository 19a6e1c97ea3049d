use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge ({0}, {1}) is not in the graph")]
    InvalidEdge(usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("contract violation: {0}")]
    Contract(String),
    #[error("refused: {0}")]
    Refused(String),
    #[error("not a {stretch}-spanner: edge ({u}, {v}) has distance {dist} in the subgraph")]
    SpannerViolation { u: usize, v: usize, dist: String, stretch: u32 },
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
