//! Exact rationals and exact comparison of rationals against square roots
//! of rationals.
//!
//! Rationals are [`num_rational::BigRational`]: arbitrary precision, always
//! in lowest terms with a positive denominator, so equality is structural.
//! Square roots are kept symbolic as [`SqrtQuantity`] and only ever compared,
//! never evaluated numerically.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::Error;

/// Exact rational number in lowest terms, positive denominator.
pub type Rational = num_rational::BigRational;

/// Rational from an integer.
pub fn rat<N: Into<BigInt>>(n: N) -> Rational {
    Rational::from_integer(n.into())
}

/// Rational `n / d`. Panics if `d == 0`; use [`parse_rational`] for
/// untrusted input.
pub fn ratio<N: Into<BigInt>, D: Into<BigInt>>(n: N, d: D) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Parses `"p"` or `"p/q"` into a reduced rational.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let err = || Error::Parse {
        what: "rational",
        input: s.to_string(),
    };
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = num.trim().parse().map_err(|_| err())?;
    let d: BigInt = den.trim().parse().map_err(|_| err())?;
    if d.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(n, d))
}

/// The nonnegative real `sqrt(radicand)` for a rational radicand `>= 0`.
///
/// Two values are equal iff their radicands are equal; the ordering is the
/// ordering of the radicands, which coincides with the ordering of the roots.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SqrtQuantity {
    radicand: Rational,
}

impl SqrtQuantity {
    pub fn new(radicand: Rational) -> Result<Self, Error> {
        if radicand.is_negative() {
            return Err(Error::NegativeRadicand(radicand.to_string()));
        }
        Ok(SqrtQuantity { radicand })
    }

    pub fn radicand(&self) -> &Rational {
        &self.radicand
    }
}

impl fmt::Display for SqrtQuantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sqrt({})", self.radicand)
    }
}

/// Exact order of the rational `q` against `sqrt(s)`.
///
/// Sign analysis first (the root is nonnegative), then comparison of `q^2`
/// with the radicand. Total on valid inputs; no rounding anywhere.
pub fn cmp_rational_sqrt(q: &Rational, s: &SqrtQuantity) -> Ordering {
    if q.is_negative() {
        return Ordering::Less;
    }
    (q * q).cmp(s.radicand())
}

/// `ceil(p / q)` for positive integers.
pub fn ceil_of_ratio(p: &BigInt, q: &BigInt) -> Result<BigInt, Error> {
    if !p.is_positive() {
        return Err(Error::NonPositive {
            what: "numerator",
            value: p.clone(),
        });
    }
    if !q.is_positive() {
        return Err(Error::NonPositive {
            what: "denominator",
            value: q.clone(),
        });
    }
    Ok(p.div_ceil(q))
}
