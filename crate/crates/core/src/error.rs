use crate::rational::Rational;
use crate::words::Rejection;

/// Library-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Input outside the supported domain (negative slope, zero denominator, ...).
    #[error("domain error: {0}")]
    Domain(String),
    /// A continued fraction with a periodic tail has no rational value.
    #[error("continued fraction has a periodic tail; its value is irrational")]
    IrrationalValue,
    /// An operation's precondition does not hold for this input.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// The word is not a valid cutting sequence.
    #[error("not a valid cutting sequence: {0}")]
    Rejected(Rejection),
    /// The trajectory meets a lattice point, where the coding is undefined.
    #[error("trajectory hits lattice point ({x}, {y})")]
    VertexHit { x: Rational, y: Rational },
    /// Malformed text form.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
