use alloc::string::String;

use crate::axioms::AxiomId;
use crate::rational::ParseRationalError;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("value {value} at x{index} is outside [0, 1]")]
    OutOfRange { index: usize, value: Rational },
    #[error("expected {expected} values, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("RAFs belong to different priority contexts")]
    ContextMismatch,
    #[error("at least two alternatives are required, found {0}")]
    TooFewAlternatives(usize),
    #[error("duplicate alternative label `{0}`")]
    DuplicateLabel(String),
    #[error("pay-off for `{label}` is negative ({value})")]
    NegativePayoff { label: String, value: Rational },
    #[error("the context carries no pay-offs")]
    MissingPayoffs,
    #[error("weight vector has {found} entries, context has {expected} alternatives")]
    WeightArityMismatch { expected: usize, found: usize },
    #[error("weights must be positive integers")]
    InvalidWeight,
    #[error("point {0} is not in the relation's domain")]
    UnknownPoint(String),
    #[error("ranks are not contiguous from 0 (missing rank {missing})")]
    NonContiguousRanks { missing: u32 },
    #[error("domain contains the point {0} more than once")]
    DuplicatePoint(String),
    #[error("the two RAFs are equal")]
    EqualInputs,
    #[error("{points} points exceed the enumeration bound of {max}")]
    TooManyPoints { points: usize, max: usize },
    #[error("the sample is empty")]
    EmptySample,
    #[error("invalid grid: {0}")]
    InvalidGrid(&'static str),
    #[error("axiom {0} cannot be used to filter weak orders")]
    UnsupportedAxiom(AxiomId),
    #[error(transparent)]
    Parse(#[from] ParseRationalError),
}
