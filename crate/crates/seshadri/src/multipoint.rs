//! Classification of the possible values of the multi-point Seshadri constant
//! of the canonical bundle on a surface of general type when it lies strictly
//! between `0` and `1/r`.
//!
//! The closed form in [`possible_values`] is cross-checked by the exhaustive
//! feasibility oracle [`feasible_pairs`], which enumerates all `(d, m)` with
//! `d = K.C`, `m` the total multiplicity, `m > d r` and `phi(r, d, m) < 0`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::exact::{ratio, Rational};
use crate::lattice::{is_minus_two_class, DivisorClass, Genus};
use crate::Error;

/// A pair `(d, m)` surviving the feasibility constraint: `m > d r` and
/// `phi(r, d, m) = m^2 - r m - r (2 + d^2 + d) < 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FeasiblePair {
    pub d: u64,
    pub m: u64,
}

impl FeasiblePair {
    /// The Seshadri ratio `d / m` this pair realizes, in lowest terms.
    pub fn ratio(&self) -> Rational {
        ratio(self.d, self.m)
    }
}

/// `phi(r, d, m) = m^2 - r m - r (2 + d^2 + d)`.
pub fn phi(r: u64, d: u64, m: u64) -> Result<BigInt, Error> {
    if r < 2 {
        return Err(Error::TooFewPoints(r.into()));
    }
    let (r, d, m) = (BigInt::from(r), BigInt::from(d), BigInt::from(m));
    Ok(&m * &m - &r * &m - &r * (BigInt::from(2) + &d * &d + &d))
}

/// Largest `m` that can possibly satisfy `phi(r, d, m) < 0`, from the positive
/// root of the quadratic: `floor((r + isqrt(r^2 + 4r(2 + d^2 + d))) / 2) + 1`.
/// Integer square root only; the endpoint is checked explicitly by the caller.
fn m_upper_bound(r: u64, d: u64) -> u64 {
    let rb = BigInt::from(r);
    let db = BigInt::from(d);
    let disc = &rb * &rb + BigInt::from(4) * &rb * (BigInt::from(2) + &db * &db + &db);
    let root = (&rb + disc.sqrt()) / BigInt::from(2) + BigInt::from(1);
    u64::try_from(&root).expect("bound fits u64 for u64 inputs")
}

/// Exhaustive enumeration of all feasible `(d, m)` for `r` points.
///
/// Scans `d = 1, 2, 3` over the full `m`-range `(dr, upper root]`; the `d = 3`
/// row is asserted empty, and monotonicity of `phi` in `d` (a tested property)
/// rules out `d > 3`.
pub fn feasible_pairs(r: u64) -> Result<BTreeSet<FeasiblePair>, Error> {
    if r < 2 {
        return Err(Error::TooFewPoints(r.into()));
    }
    let mut out = BTreeSet::new();
    for d in 1..=3u64 {
        let lo = d * r + 1;
        let hi = m_upper_bound(r, d);
        for m in lo..=hi {
            if phi(r, d, m)?.is_negative() {
                assert!(d < 3, "d = 3 must contribute no feasible pair");
                out.insert(FeasiblePair { d, m });
            }
        }
    }
    Ok(out)
}

/// Closed-form value set for `epsilon(K_X, x_1, ..., x_r)` in `(0, 1/r)`:
/// `{1/(r+1), 2/5}` for `r = 2`; `{1/(r+1), 1/(r+2)}` for `3 <= r <= 9`;
/// `{1/(r+1), 1/(r+2), 1/(r+3)}` for `r >= 10`.
///
/// These are the candidates the classification permits; whether a given
/// surface attains them is a geometric question not decided here.
pub fn possible_values(r: u64) -> Result<BTreeSet<Rational>, Error> {
    if r < 2 {
        return Err(Error::TooFewPoints(r.into()));
    }
    let mut out = BTreeSet::new();
    out.insert(ratio(1u64, r + 1));
    if r == 2 {
        out.insert(ratio(2, 5));
    } else {
        out.insert(ratio(1u64, r + 2));
        if r >= 10 {
            out.insert(ratio(1u64, r + 3));
        }
    }
    Ok(out)
}

/// Numerical certificate for `epsilon(K_X, x_1, ..., x_r) = 0`: a curve class
/// with `K.D = 0` and `D^2 = -2` through one of the points forces the constant
/// to vanish.
pub fn epsilon_zero_iff(d: &DivisorClass, g: &Genus) -> bool {
    is_minus_two_class(d, g)
}
