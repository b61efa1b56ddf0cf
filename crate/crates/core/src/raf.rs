//! Random availability functions and the predicates every relation builds on.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::rational::Rational;
use crate::{Error, Result};

/// The priority-ordered alternatives `x1, ..., xK` and optional pay-offs.
///
/// Position `i` holds `x_{i+1}`; earlier positions are strictly preferred as
/// alternatives. Every [`Raf`] points at exactly one context and RAFs from
/// different contexts never compare.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PriorityContext {
    labels: Vec<String>,
    payoffs: Option<Vec<Rational>>,
}

impl PriorityContext {
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Arc<Self>> {
        Self::validated(labels).map(Arc::new)
    }

    fn validated<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() < 2 {
            return Err(Error::TooFewAlternatives(labels.len()));
        }
        for (i, label) in labels.iter().enumerate() {
            if labels[..i].contains(label) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(PriorityContext { labels, payoffs: None })
    }

    /// Labels `x1, ..., xK`.
    pub fn indexed(arity: usize) -> Result<Arc<Self>> {
        Self::new((1..=arity).map(|i| format!("x{i}")))
    }

    /// Payoffs are given in priority order, one per alternative.
    pub fn with_payoffs<S: Into<String>>(
        labels: impl IntoIterator<Item = S>,
        payoffs: Vec<Rational>,
    ) -> Result<Arc<Self>> {
        let mut ctx = Self::validated(labels)?;
        if payoffs.len() != ctx.labels.len() {
            return Err(Error::ArityMismatch {
                expected: ctx.labels.len(),
                found: payoffs.len(),
            });
        }
        if let Some((i, value)) = payoffs.iter().enumerate().find(|(_, v)| v.is_negative()) {
            return Err(Error::NegativePayoff {
                label: ctx.labels[i].clone(),
                value: value.clone(),
            });
        }
        ctx.payoffs = Some(payoffs);
        Ok(Arc::new(ctx))
    }

    pub fn arity(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn payoffs(&self) -> Option<&[Rational]> {
        self.payoffs.as_deref()
    }

    /// 0-based priority position of `label`.
    pub fn position(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

/// A random availability function: `values[i]` is the probability that
/// `x_{i+1}` is available.
#[derive(Clone)]
pub struct Raf {
    ctx: Arc<PriorityContext>,
    values: Vec<Rational>,
}

impl Raf {
    pub fn new(values: Vec<Rational>, ctx: &Arc<PriorityContext>) -> Result<Self> {
        if values.len() != ctx.arity() {
            return Err(Error::ArityMismatch {
                expected: ctx.arity(),
                found: values.len(),
            });
        }
        if let Some((i, value)) = values.iter().enumerate().find(|(_, v)| !v.is_probability()) {
            return Err(Error::OutOfRange {
                index: i + 1,
                value: value.clone(),
            });
        }
        Ok(Raf {
            ctx: Arc::clone(ctx),
            values,
        })
    }

    pub fn context(&self) -> &Arc<PriorityContext> {
        &self.ctx
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn arity(&self) -> usize {
        self.values.len()
    }

    pub fn same_context(&self, other: &Raf) -> bool {
        Arc::ptr_eq(&self.ctx, &other.ctx) || self.ctx == other.ctx
    }

    pub(crate) fn ensure_same_context(&self, other: &Raf) -> Result<()> {
        if self.same_context(other) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    /// A copy of this RAF with coordinate `index` (0-based) replaced.
    pub fn with_value(&self, index: usize, value: Rational) -> Result<Raf> {
        let mut values = self.values.clone();
        values[index] = value;
        Raf::new(values, &self.ctx)
    }
}

impl PartialEq for Raf {
    fn eq(&self, other: &Self) -> bool {
        self.same_context(other) && self.values == other.values
    }
}

impl Eq for Raf {}

impl fmt::Display for Raf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Raf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Raf{self}")
    }
}

pub fn make_raf(values: Vec<Rational>, ctx: &Arc<PriorityContext>) -> Result<Raf> {
    Raf::new(values, ctx)
}

pub(crate) fn first_difference_of(a: &[Rational], b: &[Rational]) -> Option<usize> {
    a.iter().zip(b).position(|(x, y)| x != y)
}

/// 1-based index of the first alternative where `a` and `b` differ, or `None`
/// when they are equal.
pub fn first_difference(a: &Raf, b: &Raf) -> Result<Option<usize>> {
    a.ensure_same_context(b)?;
    Ok(first_difference_of(&a.values, &b.values).map(|i| i + 1))
}

pub fn strictly_dominates(a: &Raf, b: &Raf) -> Result<bool> {
    a.ensure_same_context(b)?;
    Ok(a.values.iter().zip(&b.values).all(|(x, y)| x > y))
}

pub fn pointwise_geq(a: &Raf, b: &Raf) -> Result<bool> {
    a.ensure_same_context(b)?;
    Ok(a.values.iter().zip(&b.values).all(|(x, y)| x >= y))
}

/// Sign of `a(x_i) - b(x_i)` for every alternative, in priority order.
pub fn difference_signs(a: &Raf, b: &Raf) -> Result<Vec<Ordering>> {
    a.ensure_same_context(b)?;
    Ok(a.values.iter().zip(&b.values).map(|(x, y)| x.cmp(y)).collect())
}

/// A finite product grid `levels^K` inside `[0,1]^K`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridSpec {
    levels: Vec<Rational>,
    arity: usize,
}

impl GridSpec {
    /// Levels are sorted; duplicates and values outside `[0, 1]` are rejected.
    pub fn new(mut levels: Vec<Rational>, arity: usize) -> Result<Self> {
        if levels.is_empty() {
            return Err(Error::InvalidGrid("at least one level is required"));
        }
        if levels.iter().any(|v| !v.is_probability()) {
            return Err(Error::InvalidGrid("levels must lie in [0, 1]"));
        }
        if arity < 2 {
            return Err(Error::TooFewAlternatives(arity));
        }
        levels.sort();
        if levels.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidGrid("levels must be distinct"));
        }
        Ok(GridSpec { levels, arity })
    }

    pub fn levels(&self) -> &[Rational] {
        &self.levels
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// `levels^K`, saturating.
    pub fn size(&self) -> usize {
        self.levels.len().saturating_pow(self.arity as u32)
    }

    /// All grid points, first coordinate most significant, each coordinate
    /// running through the levels in increasing order.
    pub fn points(&self, ctx: &Arc<PriorityContext>) -> Result<Vec<Raf>> {
        if ctx.arity() != self.arity {
            return Err(Error::ArityMismatch {
                expected: ctx.arity(),
                found: self.arity,
            });
        }
        let n = self.levels.len();
        let total = self.size();
        let mut out = Vec::with_capacity(total);
        let mut digits = alloc::vec![0usize; self.arity];
        for _ in 0..total {
            let values = digits.iter().map(|&d| self.levels[d].clone()).collect();
            out.push(Raf::new(values, ctx)?);
            for d in digits.iter_mut().rev() {
                *d += 1;
                if *d < n {
                    break;
                }
                *d = 0;
            }
        }
        Ok(out)
    }

    pub fn describe(&self) -> String {
        let levels: Vec<String> = self.levels.iter().map(|l| format!("{l}")).collect();
        format!("{{{}}}^{}", levels.join(", "), self.arity)
    }
}

pub fn grid_points(spec: &GridSpec, ctx: &Arc<PriorityContext>) -> Result<Vec<Raf>> {
    spec.points(ctx)
}
