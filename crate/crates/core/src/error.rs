use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("edge {0}-{1} does not exist")]
    MissingEdge(usize, usize),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("split of vertex {vertex}: parts do not cover its neighborhood exactly")]
    InvalidSplit { vertex: usize },

    #[error("split #{index}: {source}")]
    InvalidSequence {
        index: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("search budget exceeded after {nodes} nodes ({secs:.2}s)")]
    BudgetExceeded { nodes: u64, secs: f64 },

    #[error("graph has {n} vertices, more than the supported {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("internal consistency check failed: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
