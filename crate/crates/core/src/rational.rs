//! Exact rational numbers.
//!
//! A thin newtype over [`num_rational::BigRational`] that fixes the textual
//! grammar (`p/q` or a finite decimal, no exponents) and the display form
//! (`p/q` in lowest terms, or a bare integer when `q = 1`).

use alloc::string::{String, ToString};
use core::fmt;
use core::ops::{Add, Mul, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse `{input}` as a rational: {reason}")]
pub struct ParseRationalError {
    pub input: String,
    pub reason: &'static str,
}

impl Rational {
    /// `numer / denom`, reduced. Returns `None` when `denom` is zero.
    pub fn from_ratio(numer: i64, denom: i64) -> Option<Self> {
        if denom == 0 {
            return None;
        }
        Some(Rational(BigRational::new(numer.into(), denom.into())))
    }

    pub fn integer(value: i64) -> Self {
        Rational(BigRational::from_integer(value.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    /// Always positive.
    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// True iff `0 <= self <= 1`.
    pub fn is_probability(&self) -> bool {
        !self.0.is_negative() && self.0 <= BigRational::one()
    }

    pub fn pow(&self, exp: u32) -> Self {
        Rational(Pow::pow(&self.0, exp))
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }
}

impl From<BigRational> for Rational {
    fn from(value: BigRational) -> Self {
        Rational(value)
    }
}

impl From<i64> for Rational {
    fn from(value: i64) -> Self {
        Rational::integer(value)
    }
}

impl<'a> Add<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn add(self, rhs: &'a Rational) -> Rational {
        Rational(&self.0 + &rhs.0)
    }
}

impl<'a> Sub<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn sub(self, rhs: &'a Rational) -> Rational {
        Rational(&self.0 - &rhs.0)
    }
}

impl<'a> Mul<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn mul(self, rhs: &'a Rational) -> Rational {
        Rational(&self.0 * &rhs.0)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_digits(s: &str) -> Option<BigInt> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    BigInt::from_str(s).ok()
}

impl FromStr for Rational {
    type Err = ParseRationalError;

    /// Accepts `p/q` (optional leading `-` on `p`, `q > 0`) or a finite
    /// decimal such as `0.8`, `40` or `-1.25`. Decimals convert exactly:
    /// `0.8` is `4/5`.
    fn from_str(input: &str) -> Result<Self, Self::Err> {
        let fail = |reason| ParseRationalError {
            input: input.to_string(),
            reason,
        };
        let s = input.trim();
        let (negative, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let value = if let Some((p, q)) = body.split_once('/') {
            let p = parse_digits(p).ok_or_else(|| fail("numerator is not a digit string"))?;
            let q = parse_digits(q).ok_or_else(|| fail("denominator is not a digit string"))?;
            if q.is_zero() {
                return Err(fail("zero denominator"));
            }
            BigRational::new(p, q)
        } else if let Some((int, frac)) = body.split_once('.') {
            let int = parse_digits(int).ok_or_else(|| fail("malformed integer part"))?;
            let frac_digits =
                parse_digits(frac).ok_or_else(|| fail("malformed fractional part"))?;
            let scale = Pow::pow(BigInt::from(10u32), frac.len());
            BigRational::new(int * &scale + frac_digits, scale)
        } else {
            BigRational::from_integer(parse_digits(body).ok_or_else(|| fail("not a number"))?)
        };
        Ok(Rational(if negative { -value } else { value }))
    }
}
