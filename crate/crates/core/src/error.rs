use thiserror::Error;

use crate::{Rational, Verdict};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("carrier must have at least one element")]
    EmptyCarrier,
    #[error("row {row} has {len} entries, expected {size}")]
    RaggedTable { row: usize, len: usize, size: usize },
    #[error("tables disagree on the carrier size ({left} vs {right})")]
    SizeMismatch { left: usize, right: usize },
    #[error("index {index} is outside the carrier 0..{size}")]
    InvalidIndex { index: usize, size: usize },
    #[error("carrier of {size} elements exceeds the cap of {cap}")]
    TooLarge { size: usize, cap: usize },
    #[error("zero and one coincide in a carrier of {size} elements")]
    DegenerateConstants { size: usize },
    #[error("complement table is not a permutation: {0} has no preimage")]
    ComplementNotPermutation(usize),
    #[error("expected {expected} names, got {got}")]
    NameCount { expected: usize, got: usize },
    #[error("duplicate name {0:?}")]
    DuplicateName(String),
    #[error("elements {x} and {y} have no {bound} in the order")]
    NotALattice { x: usize, y: usize, bound: &'static str },
    #[error("relation is not a partial order: {0}")]
    NotAPartialOrder(Box<Verdict>),
    #[error("not an RLSE: {0}")]
    NotAnRlse(Box<Verdict>),
    #[error("not an orthomodular lattice: {0}")]
    NotOrthomodular(Box<Verdict>),
    #[error("precondition failed: {0}")]
    PreconditionFailed(Box<Verdict>),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("state space must have at least one state")]
    EmptyStateSpace,
    #[error("duplicate state label {0:?}")]
    DuplicateState(String),
    #[error("value {value} at position {position} is outside [0, 1]")]
    OutOfRange { value: Rational, position: usize },
    #[error("event has {got} values but the state space has {expected} states")]
    SpaceMismatch { expected: usize, got: usize },
    #[error("event {0} occurs twice in the family")]
    DuplicateEvent(String),
    #[error("family is not closed: {op} of {left} and {right} is not a member")]
    NotClosed { left: String, right: String, op: &'static str },
    #[error("event {0} is not two-valued")]
    NotTwoValued(String),
    #[error("{0} is not a member of the ambient family")]
    NotMember(String),
    #[error("ambient family has {size} members, the oracle cap is {cap}")]
    AmbientTooLarge { size: usize, cap: usize },
    #[error("state space has {size} states, the cap is {cap}")]
    TooManyStates { size: usize, cap: usize },
    #[error("invalid subset: {0}")]
    InvalidSubset(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

impl Error {
    /// True for errors that report a violated precondition of an operation
    /// rather than malformed input.
    pub fn is_precondition(&self) -> bool {
        matches!(
            self,
            Error::NotAPartialOrder(_)
                | Error::NotAnRlse(_)
                | Error::NotOrthomodular(_)
                | Error::PreconditionFailed(_)
                | Error::NotClosed { .. }
                | Error::NotTwoValued(_)
                | Error::NotMember(_)
                | Error::AmbientTooLarge { .. }
                | Error::TooManyStates { .. }
                | Error::NotALattice { .. }
                | Error::TooLarge { .. }
        )
    }
}
