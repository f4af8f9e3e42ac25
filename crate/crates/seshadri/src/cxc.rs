//! Closed-form Seshadri results on `X = C × C`: rationality conditions for a
//! general ample class, the threshold dichotomy for `epsilon(K_X, r)`, and the
//! exact values for fiber-type polarizations `a F1 + b F2` at one and two
//! points.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exact::{ceil_of_ratio, rat, ratio, Rational, SqrtQuantity};
use crate::lattice::{ample_necessary, canonical_class, DivisorClass, Genus};
use crate::Error;

/// Relative position of two distinct points of `C × C`.
///
/// Distinct points cannot share both an `F1`- and an `F2`-fiber.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwoPointConfig {
    /// Equal first coordinates: both points on one fiber of class `F1`.
    SameFiberF1,
    /// Equal second coordinates: both points on one fiber of class `F2`.
    SameFiberF2,
    General,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fiber {
    F1,
    F2,
}

impl std::fmt::Display for Fiber {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Fiber::F1 => write!(f, "F1"),
            Fiber::F2 => write!(f, "F2"),
        }
    }
}

/// One of the five sufficient conditions for rationality of `epsilon(L)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Condition {
    /// `a3 = 0`.
    Cond1,
    /// `a3 > 0`, `a1 <= a2`, `a1^2 + a3^2 < 2 a1 a2`.
    Cond2,
    /// `a3 > 0`, `a2 <= a1`, `a2^2 + a3^2 < 2 a1 a2`.
    Cond3,
    /// `a3 < 0`, `a2 >= ((2g k^2 + 2k + 1) / (2(k+1))) a1`,
    /// `k = ceil(|a3| / (a1 - |a3|))`.
    Cond4 { k: BigInt },
    /// Mirror of condition 4 with the roles of `a1` and `a2` swapped.
    Cond5 { l: BigInt },
}

impl Condition {
    pub fn index(&self) -> u8 {
        match self {
            Condition::Cond1 => 1,
            Condition::Cond2 => 2,
            Condition::Cond3 => 3,
            Condition::Cond4 { .. } => 4,
            Condition::Cond5 { .. } => 5,
        }
    }
}

/// Outcome of [`rationality_classify`]: every matched condition, plus a fiber
/// witnessing sub-maximality (`(L.F)^2 <= L^2`) whenever any condition holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalityVerdict {
    pub matched_conditions: Vec<Condition>,
    pub submaximal_fiber: Option<Fiber>,
}

impl RationalityVerdict {
    pub fn is_rational_certified(&self) -> bool {
        !self.matched_conditions.is_empty()
    }
}

fn require_positive(what: &'static str, v: &BigInt) -> Result<(), Error> {
    if v.is_positive() {
        Ok(())
    } else {
        Err(Error::NonPositive {
            what,
            value: v.clone(),
        })
    }
}

/// `epsilon(a F1 + b F2, x) = min{a, b}` at every point.
pub fn epsilon_fiber_one_point(a: &BigInt, b: &BigInt) -> Result<Rational, Error> {
    require_positive("a", a)?;
    require_positive("b", b)?;
    Ok(rat(a.min(b).clone()))
}

/// `epsilon(a F1 + b F2, x1, x2)`: `min{a, b/2}` when both points share an
/// `F1`-fiber, `min{a/2, b}` when they share an `F2`-fiber, `min{a, b}`
/// otherwise.
pub fn epsilon_fiber_two_points(
    a: &BigInt,
    b: &BigInt,
    cfg: TwoPointConfig,
) -> Result<Rational, Error> {
    require_positive("a", a)?;
    require_positive("b", b)?;
    let value = match cfg {
        TwoPointConfig::SameFiberF1 => rat(a.clone()).min(ratio(b.clone(), 2)),
        TwoPointConfig::SameFiberF2 => ratio(a.clone(), 2).min(rat(b.clone())),
        TwoPointConfig::General => rat(a.min(b).clone()),
    };
    Ok(value)
}

/// The coefficient bound of condition 4: `(2g k^2 + 2k + 1) / (2(k + 1))`.
pub fn cond4_threshold(k: &BigInt, g: &Genus) -> Rational {
    let two = BigInt::from(2);
    ratio(
        &two * g.value() * k * k + &two * k + BigInt::one(),
        &two * (k + BigInt::one()),
    )
}

/// Tests the five rationality conditions on an ample-necessary class and
/// reports all matches together with a verified sub-maximal fiber.
pub fn rationality_classify(l: &DivisorClass, g: &Genus) -> Result<RationalityVerdict, Error> {
    if !ample_necessary(l, g) {
        return Err(Error::NotAmple(l.a1.clone(), l.a2.clone(), l.a3.clone()));
    }
    let (a1, a2, a3) = (&l.a1, &l.a2, &l.a3);
    let two_a1a2 = BigInt::from(2) * a1 * a2;
    let mut matched = Vec::new();

    if a3.is_zero() {
        matched.push(Condition::Cond1);
    }
    if a3.is_positive() {
        if a1 <= a2 && a1 * a1 + a3 * a3 < two_a1a2 {
            matched.push(Condition::Cond2);
        }
        if a2 <= a1 && a2 * a2 + a3 * a3 < two_a1a2 {
            matched.push(Condition::Cond3);
        }
    }
    if a3.is_negative() {
        let abs_a3 = a3.abs();
        // ampleness gives L.F2 = a1 + a3 > 0 and L.F1 = a2 + a3 > 0,
        // so both denominators below are positive
        assert!(*a1 > abs_a3 && *a2 > abs_a3);
        let k = ceil_of_ratio(&abs_a3, &(a1 - &abs_a3))?;
        if rat(a2.clone()) >= cond4_threshold(&k, g) * rat(a1.clone()) {
            matched.push(Condition::Cond4 { k });
        }
        let l_par = ceil_of_ratio(&abs_a3, &(a2 - &abs_a3))?;
        if rat(a1.clone()) >= cond4_threshold(&l_par, g) * rat(a2.clone()) {
            matched.push(Condition::Cond5 { l: l_par });
        }
    }

    let submaximal_fiber = if matched.is_empty() {
        None
    } else {
        let l2 = l.self_int(g);
        let lf2 = l.dot_fiber2();
        let lf1 = l.dot_fiber1();
        if &lf2 * &lf2 <= l2 {
            Some(Fiber::F2)
        } else if &lf1 * &lf1 <= l2 {
            Some(Fiber::F1)
        } else {
            unreachable!("a matched condition must exhibit a sub-maximal fiber")
        }
    };
    Ok(RationalityVerdict {
        matched_conditions: matched,
        submaximal_fiber,
    })
}

/// The dichotomy threshold `sqrt((r+2)/(r+3)) * sqrt(K_X^2 / r)` for
/// `epsilon(K_X, r)`, as one exact surd. Requires `r >= K_X^2`.
pub fn threshold_thm32(r: &BigInt, g: &Genus) -> Result<SqrtQuantity, Error> {
    let k2 = canonical_class(g).self_int(g);
    if r < &k2 {
        return Err(Error::OutOfRange(format!(
            "r must be at least K^2 = {k2}, got {r}"
        )));
    }
    let radicand = ratio((r + BigInt::from(2)) * k2, (r + BigInt::from(3)) * r);
    SqrtQuantity::new(radicand)
}

/// Value of the second branch of the dichotomy: a curve numerically
/// `a (F1 + F2)` through `r` points with multiplicity one gives
/// `epsilon = a (K.F1 + K.F2) / r = 4 a (g - 1) / r`.
pub fn fiber_sum_epsilon(a: &BigInt, r: &BigInt, g: &Genus) -> Result<Rational, Error> {
    require_positive("a", a)?;
    require_positive("r", r)?;
    Ok(ratio(
        BigInt::from(4) * a * (g.value() - BigInt::one()),
        r.clone(),
    ))
}

/// The case-2 slack `r(r+3)(s-1) - s^2(r+2)` for a curve through
/// `2 <= s <= r-1` of the `r` points; nonnegative for every `r >= 4`.
pub fn thm32_case2_gap(r: &BigInt, s: &BigInt) -> Result<BigInt, Error> {
    if *s < BigInt::from(2) || *s > r - BigInt::one() {
        return Err(Error::OutOfRange(format!(
            "s must satisfy 2 <= s <= r - 1, got s = {s}, r = {r}"
        )));
    }
    let one = BigInt::one();
    Ok(r * (r + BigInt::from(3)) * (s - &one) - s * s * (r + BigInt::from(2)))
}

/// The case-3 inequality `a1^2 + a2^2 + 4 a3^2 g >= 2 a1 a2 + 2/3` in integer
/// form `3(a1^2 + a2^2 + 4 a3^2 g) >= 6 a1 a2 + 2`; fails exactly on the
/// diagonal `a3 = 0`, `a1 = a2`.
pub fn thm32_class_gap(d: &DivisorClass, g: &Genus) -> bool {
    let (a1, a2, a3) = (&d.a1, &d.a2, &d.a3);
    let lhs = BigInt::from(3) * (a1 * a1 + a2 * a2 + BigInt::from(4) * a3 * a3 * g.value());
    let rhs = BigInt::from(6) * a1 * a2 + BigInt::from(2);
    lhs >= rhs
}
