use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("loop at vertex {0}: simple graphs have no loops")]
    Loop(usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("{n} vertices exceeds the supported maximum of {max}")]
    TooManyVertices { n: usize, max: usize },

    #[error("{what} needs n <= {limit}, got n = {n}")]
    TooLarge {
        what: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("adjacency is not symmetric at ({0}, {1})")]
    Asymmetric(usize, usize),

    #[error("vertex set is not independent: {0} and {1} are adjacent")]
    NotIndependent(usize, usize),

    #[error("no independent set of size {k}; the independence number is {alpha}")]
    NoIndependentSet { k: usize, alpha: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph has an isolated vertex ({0})")]
    IsolatedVertex(usize),

    #[error("graph6 parse error at byte {pos}: {msg}")]
    Graph6 { pos: usize, msg: String },

    #[error("edge list parse error on line {line}: {msg}")]
    EdgeList { line: usize, msg: String },

    #[error("invalid Cameron-Walker specification: {0}")]
    InvalidCwSpec(String),

    #[error("Cameron-Walker decomposition failed: {0}")]
    Decomposition(String),

    #[error("graph is not Cameron-Walker")]
    NotCameronWalker,

    #[error("no construction for (r, d) = ({r}, {d}): {reason}")]
    UnsupportedPair { r: usize, d: usize, reason: String },

    #[error("(r, d, n) = ({r}, {d}, {n}) violates {constraint}")]
    CwConstraint {
        r: usize,
        d: usize,
        n: usize,
        constraint: &'static str,
    },

    #[error("graph {graph6}: {source}")]
    InGraph {
        graph6: String,
        #[source]
        source: Box<Error>,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("checkpoint: {0}")]
    Checkpoint(String),

    #[error("i/o: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
