use thiserror::Error;

use crate::graph::{EdgeId, VertexId};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("vertex {vertex} has degree {degree}, expected 3")]
    NotCubic { vertex: VertexId, degree: usize },
    #[error("edge {0} is not live")]
    DeadEdge(EdgeId),
    #[error("source and sink are the same vertex {0}")]
    SameVertex(VertexId),
    #[error("expected 2 components, found {0}")]
    ComponentCountMismatch(usize),
    #[error("graph has {size} edges, above the enumeration cap of {cap}")]
    TooLarge { size: usize, cap: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has a bridge ({0})")]
    HasBridge(EdgeId),
    #[error("piece is not 3-edge-connected")]
    NotThreeEdgeConnected,
    #[error("cactus construction failed: {0}")]
    NotCactus(String),
    #[error("cactus does not represent the 2-edge-cuts: {0}")]
    RepresentationGap(String),
    #[error("cactus node {0} does not have degree 2")]
    NotDegree2(u32),
    #[error("cactus edges do not form a 2-edge-cut of the cactus")]
    NotCactusCut,
    #[error("edges {0} and {1} do not form a 2-edge-cut")]
    NotTwoCut(EdgeId, EdgeId),
    #[error("reduction would create a loop at vertex {0}")]
    LoopWouldForm(VertexId),
    #[error("no well-spread perfect matching found")]
    NoWspm,
    #[error("search budget of {0} edge choices exceeded")]
    BudgetExceeded(u64),
    #[error("piece matchings disagree on the reduction edges of step {0}")]
    AgreementViolated(usize),
    #[error("result failed verification: {0}")]
    VerificationFailed(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
