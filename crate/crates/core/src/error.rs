use thiserror::Error;

use crate::digraph::ArcId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("digraph must have at least one vertex")]
    NoVertices,

    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("unknown arc id {0}")]
    UnknownArc(ArcId),

    #[error("arc-connectivity needs at least two vertices, got {0}")]
    TooFewVertices(usize),

    #[error("source and sink coincide at vertex {0}")]
    SameEndpoints(usize),

    #[error("not {k}-arc-connected (lambda = {lambda})")]
    NotKArcConnected { lambda: usize, k: usize },

    #[error("reversing F gives lambda = {lambda} < k = {k}")]
    ReversalTooWeak { lambda: usize, k: usize },

    #[error("reversal set F is empty")]
    EmptyReversalSet,

    #[error("invalid k = {k}: {reason}")]
    InvalidK { k: usize, reason: &'static str },

    #[error("arc {0} enters no in-tight set (it is reversible)")]
    ArcNotBlocked(ArcId),

    #[error("set {0:?} is not in-tight")]
    NotTight(Vec<usize>),

    #[error("no reversible arc although lambda = {lambda} <= {floor}")]
    GuaranteeViolated { lambda: usize, floor: usize },

    #[error("seed orientation mismatch: {0}")]
    SeedMismatch(String),

    #[error("oracle limit exceeded: {0}")]
    OracleLimit(String),

    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),
}
