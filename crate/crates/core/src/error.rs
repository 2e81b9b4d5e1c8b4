use thiserror::Error;

use crate::graph::{EdgeId, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge {edge} references vertex {vertex}, but the graph has {vertex_count} vertices")]
    NoSuchVertex {
        edge: EdgeId,
        vertex: VertexId,
        vertex_count: usize,
    },
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(VertexId),
    #[error("edge {0} is not in the graph")]
    UnknownEdge(EdgeId),
    #[error("a vertex pair needs two distinct vertices, got {0} twice")]
    SameVertex(VertexId),
    #[error("edge {0} is a loop")]
    LoopEdge(EdgeId),
    #[error("edge {edge} is not suppressible: vertex {vertex} is left with a loop")]
    NonSuppressible { edge: EdgeId, vertex: VertexId },
    #[error("vertex {0} carries a loop")]
    LoopAtVertex(VertexId),
    #[error("vertex {vertex} has degree {degree}, expected {expected}")]
    WrongDegree {
        vertex: VertexId,
        degree: usize,
        expected: usize,
    },
    #[error("vertex {vertex} has degree {degree}, more than 3")]
    DegreeTooHigh { vertex: VertexId, degree: usize },
    #[error("operation needs a graph without dangling edges")]
    DanglingEdges,
    #[error("graph is not connected")]
    Disconnected,
    #[error("flow assignment covers {got} edges, graph has {expected}")]
    FlowShape { expected: usize, got: usize },
    #[error("graph is not a snark: {0}")]
    NotSnark(crate::criticality::NotSnark),
    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },
    #[error("graph6 can only encode simple graphs: {0}")]
    NotSimple(&'static str),
    #[error("unknown named graph `{0}`")]
    UnknownName(String),
    #[error("flower snark parameter must be odd and at least 5, got {0}")]
    FlowerParameter(usize),
    #[error("graph has {order} vertices, this operation supports at most {limit}")]
    TooLarge { order: usize, limit: usize },
    #[error("line {line}: {source}")]
    AtLine { line: usize, source: Box<Error> },
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
