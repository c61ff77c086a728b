use thiserror::Error;

/// Errors raised by the library. Internal-consistency failures (a broken
/// invariant that signals a bug rather than bad input) use `Internal`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph is not a simply-laced Dynkin diagram: {0}")]
    NotAde(String),
    #[error("unknown Dynkin type label `{0}`")]
    UnknownType(String),
    #[error("vertex {vertex} out of range (rank {rank})")]
    VertexOutOfRange { vertex: usize, rank: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("invalid orientation: {0}")]
    BadOrientation(String),
    #[error("invalid height function: {0}")]
    BadHeight(String),
    #[error("not a positive root: {0:?}")]
    NotPositiveRoot(Vec<i64>),
    #[error("vertex ({i}, {p}) violates the parity condition p - xi_i even")]
    Parity { i: usize, p: i64 },
    #[error("l-weight support leaves the Auslander-Reiten quiver at ({i}, {p})")]
    OutsideArQuiver { i: usize, p: i64 },
    #[error("vertex {0} is not a sink")]
    NotSink(usize),
    #[error("Kostant partition uses the simple root alpha_{0}")]
    UsesSimpleRoot(usize),
    #[error("beta mismatch: {0:?} vs {1:?}")]
    BetaMismatch(Vec<i64>, Vec<i64>),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("not in the positive root cone: {0:?}")]
    NotInPositiveCone(Vec<i64>),
    #[error("polynomial input is not symmetric: {0}")]
    NotSymmetric(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("relation violated in polynomial representation: {0}")]
    RelationViolated(String),
    #[error("internal invariant failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
