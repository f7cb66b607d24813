use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("graph is disconnected")]
    Disconnected,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("partition spec sums to {sum} but 1 + sum must equal chromatic number {chi}")]
    SpecMismatch { sum: usize, chi: usize },

    #[error("vertex {vertex} is not in the component Z_{group}(x)")]
    NotInComponent { vertex: usize, group: usize },

    #[error("precondition violated at vertex {vertex}: {reason}")]
    Precondition { vertex: usize, reason: String },

    #[error("no partitioned coloring has singleton {0}")]
    Infeasible(usize),

    #[error("recoloring produced an improper coloring (edge {0}-{1})")]
    ImproperColoring(usize, usize),

    #[error("enumeration cap exceeded: n = {n} > {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("unknown law {0:?}")]
    UnknownLaw(String),

    #[error("hypothesis breached: {0}")]
    Hypothesis(String),

    #[error("internal assertion failed: {0}")]
    Assertion(String),

    #[error("{0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}
