//! Preference relations over random availability functions (RAFs).
//!
//! A RAF assigns every alternative of a finite, priority-ordered set an
//! availability probability in `[0, 1]`. This crate provides:
//!
//! * exact rational RAF values and the elementary predicates over them
//!   ([`raf`]),
//! * concrete preference relations behind one comparator contract: the
//!   lexicographic relation, the maximum expected pay-off relation, a
//!   weighted log-product relation and rank tables ([`relations`]),
//! * executable axiom checkers that return replayable counterexamples
//!   ([`axioms`]),
//! * a finite-model search over all weak orders of a discretized RAF grid,
//!   confirming that strong monotonicity together with (weak) independence of
//!   worse alternatives singles out the lexicographic order
//!   ([`characterization`]).
//!
//! No floating point is used anywhere in a comparison path.
//!
//! The crate is `no_std` and only needs `alloc`. IO, file formats and worker
//! threads live in the `lexraf` companion crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod axioms;
pub mod characterization;
mod error;
pub mod rational;
pub mod raf;
pub mod relations;

pub use axioms::{AxiomId, AxiomReport, AxiomResult, AxiomStatus, AxiomViolation, CheckConfig};
pub use characterization::{
    construct_proof_witness, enumerate_weak_orders, fubini, proof_trace_check,
    verify_characterization, CharacterizationReport, RankedRelation, Search, VerifyOptions,
};
pub use error::Error;
pub use raf::{first_difference, pointwise_geq, strictly_dominates, GridSpec, PriorityContext, Raf};
pub use rational::Rational;
pub use relations::{ComparisonOutcome, PreferenceRelation};

pub type Result<T, E = Error> = core::result::Result<T, E>;
