use thiserror::Error;

/// Errors shared across the graph machinery, the deciders, and the oracle.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("edge {{{u}, {v}}} already present")]
    EdgeExists { u: usize, v: usize },
    #[error("edge {{{u}, {v}}} not present")]
    EdgeMissing { u: usize, v: usize },
    #[error("self-loop at vertex {0} not allowed")]
    SelfLoop(usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("graph on {n} vertices exceeds the exact-{param} size cap of {cap}")]
    CapExceeded {
        n: usize,
        cap: usize,
        param: &'static str,
    },
    #[error("graph is not bipartite (it contains an odd cycle)")]
    NotBipartite,
    #[error("graph is not a forest (it contains a cycle)")]
    NotForest,
    #[error("graph is not a path")]
    NotPath,
    #[error("graph is not a co-graph: vertices {0:?} induce a four-vertex path")]
    NotCograph([usize; 4]),
    #[error("invalid generator spec: {0}")]
    BadGenSpec(String),
    #[error("no engine available for {0}")]
    NoEngine(String),
}

pub type Result<T> = std::result::Result<T, Error>;
