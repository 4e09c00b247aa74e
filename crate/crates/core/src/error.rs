use thiserror::Error;

use crate::bitset::MAX_VERTICES;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop at vertex {0}")]
    Loop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("graph has {0} vertices; at most {max} are supported", max = MAX_VERTICES)]
    TooManyVertices(usize),

    #[error("adjacency is not symmetric at {0}-{1}")]
    AsymmetricAdjacency(usize, usize),

    #[error("invalid degree sequence: {0}")]
    InvalidDegreeSequence(String),

    #[error("isomorphism search on {n} vertices exceeds the configured cap of {cap}")]
    IsomorphismCap { n: usize, cap: usize },

    #[error("graph is not split")]
    NotSplit,

    #[error("invalid bipartition: {0}")]
    InvalidBipartition(String),

    #[error("expected two distinct vertices, got {0} twice")]
    SameVertex(usize),

    #[error("vertex {0} is not on the independent side")]
    NotIndependent(usize),

    #[error("expected a 4-vertex set, got {0} vertices")]
    QuadrupleSize(usize),

    #[error("2-switch is not valid in this graph: {0}")]
    InvalidMove(String),

    #[error("precondition `{condition}` of {claim} does not hold")]
    Precondition {
        claim: &'static str,
        condition: &'static str,
    },

    #[error("counterexample to {claim}: {detail}")]
    Falsified { claim: &'static str, detail: String },

    #[error("unknown property id `{0}`")]
    UnknownProperty(String),

    #[error("factors could not be ordered by dominance")]
    InconsistentDominance,

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("graph6: {0}")]
    Graph6(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn precondition(claim: &'static str, condition: &'static str) -> Error {
    Error::Precondition { claim, condition }
}
