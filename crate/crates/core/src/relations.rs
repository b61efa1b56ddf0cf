//! Preference relations over RAFs behind a single comparator contract.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::characterization::RankedRelation;
use crate::raf::{first_difference_of, Raf};
use crate::rational::Rational;
use crate::{Error, Result};

/// Three-valued result of comparing two RAFs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ComparisonOutcome {
    FirstPreferred,
    SecondPreferred,
    Indifferent,
}

impl ComparisonOutcome {
    /// `Greater` means the first argument is preferred.
    pub fn from_ordering(ord: Ordering) -> Self {
        match ord {
            Ordering::Greater => ComparisonOutcome::FirstPreferred,
            Ordering::Less => ComparisonOutcome::SecondPreferred,
            Ordering::Equal => ComparisonOutcome::Indifferent,
        }
    }

    /// The outcome with the arguments swapped.
    pub fn mirror(self) -> Self {
        match self {
            ComparisonOutcome::FirstPreferred => ComparisonOutcome::SecondPreferred,
            ComparisonOutcome::SecondPreferred => ComparisonOutcome::FirstPreferred,
            ComparisonOutcome::Indifferent => ComparisonOutcome::Indifferent,
        }
    }

    /// The derived weak relation: first is at least as good as second.
    pub fn at_least_as_good(self) -> bool {
        !matches!(self, ComparisonOutcome::SecondPreferred)
    }

    pub fn symbol(self) -> &'static str {
        match self {
            ComparisonOutcome::FirstPreferred => "≻",
            ComparisonOutcome::SecondPreferred => "≺",
            ComparisonOutcome::Indifferent => "∼",
        }
    }
}

/// A comparator over RAFs of one context.
///
/// Totality is structural. Implementations are expected to return
/// `Indifferent` on equal arguments and mirrored outcomes on swapped
/// arguments; transitivity is not promised and is audited by
/// [`crate::axioms`].
pub trait PreferenceRelation {
    fn compare(&self, a: &Raf, b: &Raf) -> Result<ComparisonOutcome>;
}

impl<R: PreferenceRelation + ?Sized> PreferenceRelation for &R {
    fn compare(&self, a: &Raf, b: &Raf) -> Result<ComparisonOutcome> {
        (**self).compare(a, b)
    }
}

impl<R: PreferenceRelation + ?Sized> PreferenceRelation for alloc::boxed::Box<R> {
    fn compare(&self, a: &Raf, b: &Raf) -> Result<ComparisonOutcome> {
        (**self).compare(a, b)
    }
}

/// The lexicographic relation: the RAF with the larger availability at the
/// first alternative (in priority order) where the two differ is preferred.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Lexicographic {
    reversed: bool,
}

impl Lexicographic {
    pub fn new() -> Self {
        Lexicographic { reversed: false }
    }

    /// Lexicographic with the priority order read from `xK` back to `x1`.
    pub fn reversed() -> Self {
        Lexicographic { reversed: true }
    }
}

impl PreferenceRelation for Lexicographic {
    fn compare(&self, a: &Raf, b: &Raf) -> Result<ComparisonOutcome> {
        if self.reversed {
            a.ensure_same_context(b)?;
            let ord = a
                .values()
                .iter()
                .rev()
                .zip(b.values().iter().rev())
                .map(|(x, y)| x.cmp(y))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal);
            Ok(ComparisonOutcome::from_ordering(ord))
        } else {
            lex_compare(a, b)
        }
    }
}

pub fn lex_compare(a: &Raf, b: &Raf) -> Result<ComparisonOutcome> {
    a.ensure_same_context(b)?;
    Ok(match first_difference_of(a.values(), b.values()) {
        None => ComparisonOutcome::Indifferent,
        Some(k) => ComparisonOutcome::from_ordering(a.values()[k].cmp(&b.values()[k])),
    })
}

/// `max_x π(x)·A(x)` using the pay-offs of the RAF's context.
pub fn mep_utility(a: &Raf) -> Result<Rational> {
    let payoffs = a.context().payoffs().ok_or(Error::MissingPayoffs)?;
    Ok(payoffs
        .iter()
        .zip(a.values())
        .map(|(pi, p)| pi * p)
        .max()
        .unwrap_or_else(Rational::zero))
}

/// Compare by a utility: `a` is at least as good as `b` iff `u(a) >= u(b)`.
/// Equal utilities give `Indifferent`.
pub fn utility_compare<F>(a: &Raf, b: &Raf, u: F) -> Result<ComparisonOutcome>
where
    F: Fn(&Raf) -> Result<Rational>,
{
    a.ensure_same_context(b)?;
    Ok(ComparisonOutcome::from_ordering(u(a)?.cmp(&u(b)?)))
}

/// Any relation represented by an exact rational utility.
#[derive(Clone)]
pub struct UtilityRelation<F> {
    utility: F,
}

impl<F> UtilityRelation<F>
where
    F: Fn(&Raf) -> Result<Rational>,
{
    pub fn new(utility: F) -> Self {
        UtilityRelation { utility }
    }
}

impl<F> PreferenceRelation for UtilityRelation<F>
where
    F: Fn(&Raf) -> Result<Rational>,
{
    fn compare(&self, a: &Raf, b: &Raf) -> Result<ComparisonOutcome> {
        utility_compare(a, b, &self.utility)
    }
}

/// The maximum expected pay-off relation, reading π from the context.
#[derive(Debug, Clone, Copy, Default)]
pub struct MaxExpectedPayoff;

impl PreferenceRelation for MaxExpectedPayoff {
    fn compare(&self, a: &Raf, b: &Raf) -> Result<ComparisonOutcome> {
        utility_compare(a, b, mep_utility)
    }
}

/// Positive integer weights, one per alternative in priority order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightVector(Vec<u32>);

impl WeightVector {
    pub fn new(weights: Vec<u32>) -> Result<Self> {
        if weights.iter().any(|&w| w == 0) {
            return Err(Error::InvalidWeight);
        }
        Ok(WeightVector(weights))
    }

    pub fn uniform(arity: usize) -> Self {
        WeightVector(alloc::vec![1; arity])
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }
}

// Π A(x_i)^{w_i}, or None when some coordinate is zero (the common bottom).
fn weighted_product(a: &Raf, w: &WeightVector) -> Option<Rational> {
    if a.values().iter().any(Rational::is_zero) {
        return None;
    }
    Some(
        a.values()
            .iter()
            .zip(w.as_slice())
            .fold(Rational::one(), |acc, (p, &wi)| &acc * &p.pow(wi)),
    )
}

/// The order of `Σ w_i ln A(x_i)`, decided by comparing `Π A(x_i)^{w_i}`
/// exactly. RAFs with a zero coordinate form one bottom indifference class.
pub fn wlog_compare(a: &Raf, b: &Raf, w: &WeightVector) -> Result<ComparisonOutcome> {
    a.ensure_same_context(b)?;
    if w.0.len() != a.arity() {
        return Err(Error::WeightArityMismatch {
            expected: a.arity(),
            found: w.0.len(),
        });
    }
    Ok(ComparisonOutcome::from_ordering(
        weighted_product(a, w).cmp(&weighted_product(b, w)),
    ))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedLogProduct {
    weights: WeightVector,
}

impl WeightedLogProduct {
    pub fn new(weights: WeightVector) -> Self {
        WeightedLogProduct { weights }
    }
}

impl PreferenceRelation for WeightedLogProduct {
    fn compare(&self, a: &Raf, b: &Raf) -> Result<ComparisonOutcome> {
        wlog_compare(a, b, &self.weights)
    }
}

/// A relation given by an explicit rank table over a finite domain.
#[derive(Debug, Clone)]
pub struct TableRelation {
    ranks: RankedRelation,
    index: BTreeMap<Vec<Rational>, usize>,
}

impl TableRelation {
    pub fn ranks(&self) -> &RankedRelation {
        &self.ranks
    }

    fn rank_of(&self, a: &Raf) -> Result<u32> {
        let i = self
            .index
            .get(a.values())
            .ok_or_else(|| Error::UnknownPoint(format!("{a}")))?;
        Ok(self.ranks.ranks()[*i])
    }
}

impl PreferenceRelation for TableRelation {
    fn compare(&self, a: &Raf, b: &Raf) -> Result<ComparisonOutcome> {
        a.ensure_same_context(b)?;
        if let Some(first) = self.ranks.domain().first() {
            a.ensure_same_context(first)?;
        }
        // Rank 0 is the best block.
        Ok(ComparisonOutcome::from_ordering(
            self.rank_of(b)?.cmp(&self.rank_of(a)?),
        ))
    }
}

pub fn table_relation(ranks: RankedRelation) -> TableRelation {
    let index = ranks
        .domain()
        .iter()
        .enumerate()
        .map(|(i, p)| (p.values().to_vec(), i))
        .collect();
    TableRelation { ranks, index }
}
