use thiserror::Error;

/// Every failure the library can report.
///
/// Variants named after a precondition carry enough context for the CLI to
/// print which one was violated.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("polynomial division is not exact: {0}")]
    NotDivisible(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error(
        "root refinement did not reach tolerance {tol:e} (best certified radius {achieved:e})"
    )]
    ToleranceNotReached { tol: f64, achieved: f64 },
    #[error("expected a positive rational, got {0}")]
    NonPositive(String),
    #[error("continued fraction evaluates through a zero denominator: {0}")]
    DivisionByZero(String),
    #[error("input must be nonzero")]
    ZeroInput,
    #[error("expected first argument greater than second: {0} <= {1}")]
    OrderViolation(String, String),
    #[error("invalid triangulation: {0}")]
    InvalidTriangulation(String),
    #[error("not a frieze quiddity: {0}")]
    NotAFrieze(String),
    #[error("internal mismatch: {0}")]
    InternalMismatch(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),
    #[error(
        "continued fraction stream exhausted after {depth} terms before order {order} stabilized"
    )]
    StreamExhausted { depth: usize, order: usize },
    #[error("not a quadratic irrational: {0}")]
    NotQuadratic(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
