use thiserror::Error;

use crate::claw::ClawWitness;
use crate::interval::IntervalId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("interval {id} is empty: left {left} must be smaller than right {right}")]
    EmptyInterval { id: IntervalId, left: i64, right: i64 },

    #[error("duplicate interval id {0}")]
    DuplicateId(IntervalId),

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The input has a larger claw number than the algorithm accepts.
    #[error("claw number exceeds {bound}: {witness}")]
    ClawBound { bound: usize, witness: ClawWitness },

    #[error("partition does not match family: {0}")]
    IdMismatch(String),

    /// A constructive step produced a part that violates its proven bound.
    #[error("construction invariant failed ({what}): {witness}")]
    ConstructionInvariant { what: &'static str, witness: ClawWitness },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
