use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("edge {index} ({u}, {v}) has an endpoint outside 0..{order}")]
    EndpointOutOfRange { index: usize, u: usize, v: usize, order: usize },
    #[error("edge {index} is a self-loop at vertex {vertex}")]
    SelfLoop { index: usize, vertex: usize },
    #[error("invalid family spec: {0}")]
    InvalidSpec(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid target family: {0}")]
    InvalidTargets(String),
    #[error("exhaustive search limited to order {limit}, got {order}")]
    OrderGuard { order: usize, limit: usize },
    #[error("{0} is not covered by a closed-form result")]
    Uncovered(String),
    #[error("domain violation: {0}")]
    Domain(String),
    #[error("construction failed: {0}")]
    Construction(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
