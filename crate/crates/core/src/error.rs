use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("{0} requires a positive argument, got 0")]
    ZeroArgument(&'static str),
    #[error("triangle is degenerate (zero area)")]
    Degenerate,
    #[error("squared side lengths {0:?} violate the strict triangle inequality")]
    TriangleInequality([u64; 3]),
    #[error("grid range must be at least 1, got {0}")]
    InvalidRange(i64),
    #[error("search window must have max_norm >= 1")]
    EmptyWindow,
    #[error("cannot parse lattice point {input:?}: {reason}")]
    ParsePoint { input: String, reason: String },
}
