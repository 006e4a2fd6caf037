use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("invalid automorphism: {0}")]
    InvalidAut(String),
    #[error("not a graph automorphism: edge {from:?} maps to non-edge {to:?}")]
    AdjacencyViolation {
        from: (String, String),
        to: (String, String),
    },
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error("parse error at byte {offset}: unexpected token {token:?}")]
    Parse { token: String, offset: usize },
    #[error("words have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("pilings belong to different graphs")]
    GraphMismatch,
    #[error("elements belong to different extension groups")]
    GroupMismatch,
    #[error("no {end:?} tile on stack {vertex}")]
    NoSuchTile {
        vertex: usize,
        end: crate::piling::End,
    },
    #[error("{end:?} tile on stack {vertex} is blocked")]
    BlockedTile {
        vertex: usize,
        end: crate::piling::End,
    },
    #[error("piling is not cyclically reduced")]
    NotCyclicallyReduced,
    #[error("piling is split")]
    NotNonSplit,
    #[error("automorphism permutes vertices; only inversions are allowed here")]
    NotInversionAut,
    #[error("search budget of {0} nodes exhausted")]
    ResourceExhausted(usize),
    #[error("enumeration budget of {0} elements exceeded")]
    BudgetExceeded(usize),
    #[error("oracle bound exceeded: {0}")]
    BoundExceeded(String),
}
