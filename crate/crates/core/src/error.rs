use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("infeasible specification: {0}")]
    InfeasibleSpec(String),

    #[error("invalid specification: {0}")]
    InvalidSpec(String),

    #[error("construction precondition not met: {0}")]
    Precondition(String),

    #[error("specification kind mismatch: {0}")]
    WrongSpecKind(String),

    #[error("vertex {vertex} has value {value} above its cap {cap}")]
    CapViolation { vertex: usize, value: u32, cap: u32 },

    #[error("function caps do not match the specification: {0}")]
    CapsMismatch(String),

    #[error("resource limit exceeded after {nodes_explored} search nodes: {message}")]
    ResourceLimit { message: String, nodes_explored: u64, best_known: Option<u64> },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for errors that stem from a specification not admitting any witness on the graph.
    pub fn is_infeasible(&self) -> bool {
        matches!(self, Error::InfeasibleSpec(_))
    }
}
