use thiserror::Error;

use crate::dicut::DicutCertificate;

/// Violations of the strict-digraph invariants.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop at vertex {vertex}")]
    Loop { vertex: usize },
    #[error("antiparallel pair: edge {u} -> {v} reverses an existing edge")]
    Antiparallel { u: usize, v: usize },
    #[error("vertex {vertex} out of range for n = {n}")]
    OutOfRange { vertex: usize, n: usize },
}

/// Errors from the text formats. Every variant that refers to input content
/// carries the 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: malformed line {content:?}")]
    Malformed { line: usize, content: String },
    #[error("missing `n <N>` header")]
    MissingHeader,
    #[error("line {line}: vertex count {n} exceeds the limit of {max}")]
    TooManyVertices { line: usize, n: usize, max: usize },
    #[error("line {line}: loop at vertex {vertex}")]
    Loop { line: usize, vertex: usize },
    #[error("line {line}: antiparallel pair {u} -> {v}")]
    Antiparallel { line: usize, u: usize, v: usize },
    #[error("line {line}: vertex {vertex} out of range for n = {n}")]
    OutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: die has {found} faces, expected {expected}")]
    DieSize { line: usize, found: usize, expected: usize },
    #[error("line {line}: face value {value} already used")]
    DuplicateFace { line: usize, value: i64 },
    #[error("no dice given")]
    NoDice,
    #[error("empty certificate")]
    EmptyCertificate,
}

impl ParseError {
    pub(crate) fn from_graph(line: usize, e: GraphError) -> Self {
        match e {
            GraphError::Loop { vertex } => ParseError::Loop { line, vertex },
            GraphError::Antiparallel { u, v } => ParseError::Antiparallel { line, u, v },
            GraphError::OutOfRange { vertex, n } => ParseError::OutOfRange { line, vertex, n },
        }
    }
}

/// Errors from the analysis operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("graph has {n} vertices; at least {min} required")]
    TooSmall { n: usize, min: usize },
    #[error("graph is not weakly connected")]
    Disconnected,
    #[error("graph has a complete dicut: {0}")]
    HasCompleteDicut(DicutCertificate),
    #[error("graph is not strongly connected")]
    NotStrong,
    #[error("graph is not a tournament")]
    NotTournament,
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
}

/// Errors from the dice operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiceError {
    #[error("dice share face value {0}")]
    Overlap(i64),
    #[error("dice have different sizes ({0} and {1})")]
    SizeMismatch(usize, usize),
    #[error("die has repeated face value {0}")]
    RepeatedFace(i64),
    #[error("dice must have at least one face")]
    EmptyDie,
    #[error("need at least {min} dice, got {n}")]
    TooFew { n: usize, min: usize },
    #[error("digraph has {graph} vertices but there are {dice} dice")]
    CountMismatch { graph: usize, dice: usize },
    #[error("budget exceeded: {count} partitions > {max}")]
    Budget { count: u128, max: u128 },
}
