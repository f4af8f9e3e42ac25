//! The Néron–Severi lattice of `X = C × C` for a general curve `C` of genus
//! `g >= 2`: rank 3 with basis `F1` (fiber of the first projection), `F2`
//! (fiber of the second projection) and the diagonal class `delta`.
//!
//! Intersection numbers: `F1^2 = F2^2 = 0`, `F1.F2 = F1.delta = F2.delta = 1`,
//! `delta^2 = 2 - 2g`. A point of `X` is an ordered pair; two points share an
//! `F1`-fiber iff their first coordinates agree.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::exact::{rat, ratio, Rational};
use crate::Error;

/// Genus of the factor curve; always at least 2.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Genus(BigInt);

impl Genus {
    pub fn new<N: Into<BigInt>>(g: N) -> Result<Self, Error> {
        let g = g.into();
        if g < BigInt::from(2) {
            return Err(Error::GenusTooSmall(g));
        }
        Ok(Genus(g))
    }

    pub fn value(&self) -> &BigInt {
        &self.0
    }

    /// `2g - 2`, the negative of `delta^2`.
    fn two_g_minus_two(&self) -> BigInt {
        BigInt::from(2) * &self.0 - 2
    }
}

/// Integer class `a1*F1 + a2*F2 + a3*delta` in `NS(C × C)`.
///
/// No effectivity is implied; predicates classify classes numerically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DivisorClass {
    pub a1: BigInt,
    pub a2: BigInt,
    pub a3: BigInt,
}

impl DivisorClass {
    pub fn new<N1, N2, N3>(a1: N1, a2: N2, a3: N3) -> Self
    where
        N1: Into<BigInt>,
        N2: Into<BigInt>,
        N3: Into<BigInt>,
    {
        DivisorClass {
            a1: a1.into(),
            a2: a2.into(),
            a3: a3.into(),
        }
    }

    pub fn fiber1() -> Self {
        DivisorClass::new(1, 0, 0)
    }

    pub fn fiber2() -> Self {
        DivisorClass::new(0, 1, 0)
    }

    pub fn diagonal() -> Self {
        DivisorClass::new(0, 0, 1)
    }

    pub fn is_fiber_class(&self) -> bool {
        *self == Self::fiber1() || *self == Self::fiber2()
    }

    /// Intersection number with `F1`: `a2 + a3`.
    pub fn dot_fiber1(&self) -> BigInt {
        &self.a2 + &self.a3
    }

    /// Intersection number with `F2`: `a1 + a3`.
    pub fn dot_fiber2(&self) -> BigInt {
        &self.a1 + &self.a3
    }

    /// The symmetric bilinear intersection pairing on `NS(X)`.
    pub fn intersect(&self, other: &DivisorClass, g: &Genus) -> BigInt {
        let (a1, a2, a3) = (&self.a1, &self.a2, &self.a3);
        let (b1, b2, b3) = (&other.a1, &other.a2, &other.a3);
        a1 * b2 + a2 * b1 + a1 * b3 + a3 * b1 + a2 * b3 + a3 * b2
            - g.two_g_minus_two() * a3 * b3
    }

    /// `D^2 = 2(a1 a2 + a1 a3 + a2 a3) - (2g - 2) a3^2`.
    pub fn self_int(&self, g: &Genus) -> BigInt {
        self.intersect(self, g)
    }
}

impl std::fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.a1, self.a2, self.a3)
    }
}

/// Canonical class of `C × C`: numerically `2(g-1)(F1 + F2)`.
pub fn canonical_class(g: &Genus) -> DivisorClass {
    let c = g.two_g_minus_two();
    DivisorClass::new(c.clone(), c, 0)
}

/// The four inequalities ampleness forces on `L = a1 F1 + a2 F2 + a3 delta`:
/// `L.F1 > 0`, `L.F2 > 0`, `L.delta > 0` and `L^2 > 0`.
///
/// Necessary conditions only; this is not a full Nakai–Moishezon test.
pub fn ample_necessary(l: &DivisorClass, g: &Genus) -> bool {
    let l_delta = &l.a1 + &l.a2 - g.two_g_minus_two() * &l.a3;
    l.dot_fiber1().is_positive()
        && l.dot_fiber2().is_positive()
        && l_delta.is_positive()
        && l.self_int(g).is_positive()
}

/// Arithmetic genus by adjunction: `1 + (D^2 + K.D) / 2`.
///
/// Returned as an exact rational; it is a half-integer when `D^2 + K.D` is
/// odd, and callers needing integrality must test it themselves.
pub fn arithmetic_genus(d: &DivisorClass, g: &Genus) -> Rational {
    let k = canonical_class(g);
    rat(1) + ratio(d.self_int(g) + d.intersect(&k, g), 2)
}

/// Numerical test for a (-2)-class: `K.D = 0` and `D^2 = -2`.
pub fn is_minus_two_class(d: &DivisorClass, g: &Genus) -> bool {
    let k = canonical_class(g);
    d.intersect(&k, g).is_zero() && d.self_int(g) == BigInt::from(-2)
}

/// `(L.D)^2 - L^2 D^2`, which the Hodge Index Theorem makes nonnegative for
/// every `D` once `L^2 > 0`. Used as a hard filter in the curve search.
pub fn hodge_gap(l: &DivisorClass, d: &DivisorClass, g: &Genus) -> Result<BigInt, Error> {
    let l2 = l.self_int(g);
    if !l2.is_positive() {
        return Err(Error::NotBigClass(l2));
    }
    let ld = l.intersect(d, g);
    Ok(&ld * &ld - l2 * d.self_int(g))
}

/// Determinant of the Gram matrix of the basis `(F1, F2, delta)`; equals `2g`,
/// consistent with signature `(1, 2)`.
pub fn gram_determinant(g: &Genus) -> BigInt {
    let basis = [
        DivisorClass::fiber1(),
        DivisorClass::fiber2(),
        DivisorClass::diagonal(),
    ];
    let m: Vec<Vec<BigInt>> = basis
        .iter()
        .map(|r| basis.iter().map(|c| r.intersect(c, g)).collect())
        .collect();
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
        - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}
