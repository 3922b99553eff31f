use thiserror::Error;

use crate::cycle_space::SimplicityReport;
use crate::graph::{EdgeId, VertexId};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph is not 2-connected")]
    NotTwoConnected,

    #[error("graph is a cycle; threads need end-vertices of degree other than 2")]
    IsACycle,

    #[error("graph is not connected")]
    NotConnected,

    #[error("path is not a thread of the graph: {0}")]
    NotAThread(String),

    #[error("unknown edge id {0}")]
    UnknownEdgeId(EdgeId),

    #[error("unknown vertex id {0}")]
    UnknownVertex(VertexId),

    #[error("edge {0} is a loop")]
    Loop(EdgeId),

    #[error("duplicate edge id {0}")]
    DuplicateEdgeId(EdgeId),

    #[error("duplicate vertex id {0}")]
    DuplicateVertex(VertexId),

    #[error("cycle basis contains the same element twice (positions {0} and {1})")]
    DuplicateBasisElement(usize, usize),

    #[error("search budget of {0} exceeded")]
    SearchBudgetExceeded(u64),

    #[error("rotation system is not a planar embedding")]
    NotPlanarEmbedding,

    #[error("face is not a face of this embedding")]
    FaceNotInEmbedding,

    #[error("face index {index} out of range ({count} faces)")]
    FaceIndexOutOfRange { index: usize, count: usize },

    #[error("invalid rotation system: {0}")]
    InvalidRotation(String),

    #[error("vertex {0} is not on the face boundary")]
    EndpointNotOnFace(VertexId),

    #[error("path is not disjoint from the embedded graph: {0}")]
    PathNotDisjoint(String),

    #[error("not a simple basis: {0}")]
    NotASimpleBasis(Box<SimplicityReport>),

    #[error("thread cover violation: {0}")]
    ThreadCoverViolation(String),

    #[error("internal contradiction: {0}")]
    InternalContradiction(String),

    #[error("vertex ids are not dense (0..n); cannot serialize as an edge list")]
    NonDenseVertices,

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
