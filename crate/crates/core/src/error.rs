use thiserror::Error;

use crate::coloring::Coloring;

/// Best-known state of a search that ran out of budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partial {
    pub lower: usize,
    pub upper: usize,
    pub witness: Option<Coloring>,
}

#[derive(Error, Debug)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("join needs at least one part")]
    EmptyJoin,
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("invalid coloring: {0}")]
    InvalidColoring(String),
    #[error("coloring is not a fall coloring: {0}")]
    NotFall(String),
    #[error("epsilon must be at least 3, got {0}")]
    EpsilonTooSmall(usize),
    #[error("search budget exhausted (bounds {}..={})", .0.lower, .0.upper)]
    Exhausted(Box<Partial>),
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("DIMACS line {line}: {msg}")]
    Dimacs { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
