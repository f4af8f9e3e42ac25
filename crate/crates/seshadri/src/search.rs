//! Bounded exhaustive enumeration of candidate Seshadri curve classes on
//! `C × C` under the numerical necessary-condition filters: Bézout against
//! the two fiber classes, the Hodge-index gap, Xu's lemma and adjunction.
//!
//! The search certifies floors only within its coefficient box; the report
//! records the box, and it is evidence rather than proof except for
//! `a3 = 0` polarizations, where the Bézout argument closes the complement.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exact::{rat, ratio, Rational};
use crate::lattice::{ample_necessary, arithmetic_genus, hodge_gap, DivisorClass, Genus};
use crate::Error;

/// A divisor class together with a multiplicity vector at the assigned
/// points; multiplicities are kept sorted nonincreasing.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CandidateCurve {
    pub cls: DivisorClass,
    pub mults: Vec<u64>,
}

impl CandidateCurve {
    pub fn new(cls: DivisorClass, mut mults: Vec<u64>) -> Result<Self, Error> {
        if mults.is_empty() || mults.iter().any(|&m| m == 0) {
            return Err(Error::BadMultiplicities);
        }
        mults.sort_unstable_by(|a, b| b.cmp(a));
        Ok(CandidateCurve { cls, mults })
    }

    pub fn total_multiplicity(&self) -> BigInt {
        self.mults.iter().map(|&m| BigInt::from(m)).sum()
    }

    /// Intersection ratio `L.C / sum(m_i)` against the polarization `L`.
    pub fn ratio(&self, l: &DivisorClass, g: &Genus) -> Rational {
        ratio(l.intersect(&self.cls, g), self.total_multiplicity())
    }
}

/// Abstract point configuration: only fiber-sharing relations and diagonal
/// incidence affect the lattice computation, never coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PointConfig {
    npoints: usize,
    max_shared_f1: usize,
    max_shared_f2: usize,
    diagonal_incident: bool,
}

impl PointConfig {
    pub fn new(
        npoints: usize,
        max_shared_f1: usize,
        max_shared_f2: usize,
        diagonal_incident: bool,
    ) -> Result<Self, Error> {
        if npoints == 0 {
            return Err(Error::NonPositive {
                what: "npoints",
                value: BigInt::zero(),
            });
        }
        let share_ok = |s: usize| (1..=npoints).contains(&s);
        if !share_ok(max_shared_f1) || !share_ok(max_shared_f2) {
            return Err(Error::OutOfRange(format!(
                "fiber sharing counts must lie in [1, {npoints}]"
            )));
        }
        // distinct points sharing both fibers would coincide
        if npoints >= 2 && max_shared_f1 == npoints && max_shared_f2 == npoints {
            return Err(Error::OutOfRange(
                "distinct points cannot all share both an F1- and an F2-fiber".into(),
            ));
        }
        Ok(PointConfig {
            npoints,
            max_shared_f1,
            max_shared_f2,
            diagonal_incident,
        })
    }

    /// One very general point.
    pub fn single() -> Self {
        Self::very_general(1).expect("1 point is valid")
    }

    /// `n` very general points: no shared fibers, none on the diagonal.
    pub fn very_general(n: usize) -> Result<Self, Error> {
        Self::new(n, 1, 1, false)
    }

    /// Two distinct points in the given relative position.
    pub fn two(cfg: crate::cxc::TwoPointConfig) -> Self {
        use crate::cxc::TwoPointConfig::*;
        let (s1, s2) = match cfg {
            SameFiberF1 => (2, 1),
            SameFiberF2 => (1, 2),
            General => (1, 1),
        };
        Self::new(2, s1, s2, false).expect("two-point configs are valid")
    }

    pub fn npoints(&self) -> usize {
        self.npoints
    }

    pub fn diagonal_incident(&self) -> bool {
        self.diagonal_incident
    }
}

/// Search outcome: surviving candidates below the threshold, sorted by
/// (ratio, class, multiplicities), plus the known-curve bounds and the floor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchReport {
    pub surviving: Vec<(CandidateCurve, Rational)>,
    pub known: Vec<(DivisorClass, Rational)>,
    pub floor: Rational,
    pub box_bound: u32,
    pub threshold: Rational,
}

/// Xu's lemma lower bound `sum(m_i^2) - min(m_i)` on the self-intersection of
/// a curve through very general points with multiplicities `m_i`.
pub fn xu_floor(mults: &[u64]) -> Result<BigInt, Error> {
    if mults.is_empty() || mults.iter().any(|&m| m == 0) {
        return Err(Error::BadMultiplicities);
    }
    let sum_sq: BigInt = mults.iter().map(|&m| BigInt::from(m) * BigInt::from(m)).sum();
    let min = mults.iter().min().copied().unwrap();
    Ok(sum_sq - BigInt::from(min))
}

/// Adjunction filter: `sum(m_i (m_i - 1) / 2) <= p_a(C)` and `p_a(C) >= 0`.
pub fn adjunction_filter(c: &CandidateCurve, g: &Genus) -> bool {
    let pa = arithmetic_genus(&c.cls, g);
    if pa.is_negative() {
        return false;
    }
    let nodes: BigInt = c
        .mults
        .iter()
        .map(|&m| BigInt::from(m) * BigInt::from(m - 1) / BigInt::from(2))
        .sum();
    rat(nodes) <= pa
}

/// Bézout filter against the fibers: a curve not itself a fiber meets each
/// fiber class in at least its largest point multiplicity.
pub fn bezout_filter(c: &CandidateCurve) -> bool {
    let max = BigInt::from(c.mults.iter().max().copied().unwrap_or(0));
    c.cls.dot_fiber1() >= max && c.cls.dot_fiber2() >= max
}

/// Upper bounds on the Seshadri ratio from curves known to exist: one fiber
/// of each class through the points (shared fibers collect several points),
/// and the diagonal when the configuration is flagged diagonal-incident.
pub fn known_curve_bounds(
    l: &DivisorClass,
    g: &Genus,
    cfg: &PointConfig,
) -> Result<Vec<(DivisorClass, Rational)>, Error> {
    if !ample_necessary(l, g) {
        return Err(Error::NotAmple(l.a1.clone(), l.a2.clone(), l.a3.clone()));
    }
    let mut out = vec![
        (
            DivisorClass::fiber1(),
            ratio(l.dot_fiber1(), BigInt::from(cfg.max_shared_f1 as u64)),
        ),
        (
            DivisorClass::fiber2(),
            ratio(l.dot_fiber2(), BigInt::from(cfg.max_shared_f2 as u64)),
        ),
    ];
    if cfg.diagonal_incident {
        let delta = DivisorClass::diagonal();
        out.push((delta.clone(), rat(l.intersect(&delta, g))));
    }
    Ok(out)
}

/// Largest multiplicity compatible with Xu's lemma for a single point on a
/// class of self-intersection `c2 >= 0`: the biggest `m` with `m^2 - m <= c2`.
fn max_mult_from_xu(c2: &BigInt) -> BigInt {
    let disc = BigInt::one() + BigInt::from(4) * c2;
    let mut m = (BigInt::one() + disc.sqrt()) / BigInt::from(2);
    while &m * &m - &m > *c2 {
        m -= 1;
    }
    while (&m + BigInt::one()) * (&m + BigInt::one()) - (&m + BigInt::one()) <= *c2 {
        m += 1;
    }
    m
}

/// Exhaustive scan over all classes with coefficients in `[-box, box]` and
/// all nonincreasing multiplicity vectors, keeping candidates that pass every
/// numerical filter and whose ratio is strictly below `threshold`.
pub fn enumerate_candidates(
    l: &DivisorClass,
    g: &Genus,
    cfg: &PointConfig,
    box_bound: u32,
    threshold: &Rational,
) -> Result<SearchReport, Error> {
    if !ample_necessary(l, g) {
        return Err(Error::NotAmple(l.a1.clone(), l.a2.clone(), l.a3.clone()));
    }
    if !threshold.is_positive() {
        return Err(Error::NonPositive {
            what: "threshold",
            value: threshold.to_integer(),
        });
    }
    let known = known_curve_bounds(l, g, cfg)?;
    let b = box_bound as i64;
    let npoints = cfg.npoints;

    let mut surviving: Vec<(CandidateCurve, Rational)> = Vec::new();
    for c1 in -b..=b {
        for c2 in -b..=b {
            for c3 in -b..=b {
                let cls = DivisorClass::new(c1, c2, c3);
                if (c1 == 0 && c2 == 0 && c3 == 0) || cls.is_fiber_class() {
                    continue;
                }
                let lc = l.intersect(&cls, g);
                if !lc.is_positive() {
                    continue;
                }
                let cf1 = cls.dot_fiber1();
                let cf2 = cls.dot_fiber2();
                if cf1.is_negative() || cf2.is_negative() {
                    continue;
                }
                if hodge_gap(l, &cls, g)?.is_negative() {
                    continue;
                }
                let c2self = cls.self_int(g);
                // xu_floor([1]) = 0 already exceeds a negative self-intersection
                if c2self.is_negative() {
                    continue;
                }
                let max_mult = cf1.clone().min(cf2.clone()).min(max_mult_from_xu(&c2self));
                if max_mult < BigInt::one() {
                    continue;
                }
                let max_mult = u64::try_from(&max_mult).unwrap_or(u64::MAX);
                // ratio lower bound over all admissible vectors; prune the class
                let max_total = BigInt::from(max_mult) * BigInt::from(npoints as u64);
                if rat(lc.clone()) >= threshold * rat(max_total) {
                    continue;
                }
                let mut stack: Vec<u64> = Vec::with_capacity(npoints);
                visit_mult_vectors(max_mult, npoints, &mut stack, &mut |mults| {
                    let cand = CandidateCurve {
                        cls: cls.clone(),
                        mults: mults.to_vec(),
                    };
                    if xu_floor(mults).expect("entries >= 1") > c2self {
                        return;
                    }
                    if !adjunction_filter(&cand, g) || !bezout_filter(&cand) {
                        return;
                    }
                    let r = cand.ratio(l, g);
                    if &r < threshold {
                        surviving.push((cand, r));
                    }
                });
            }
        }
    }
    surviving.sort_by(|a, b| (&a.1, &a.0).cmp(&(&b.1, &b.0)));

    let known_min = known
        .iter()
        .map(|(_, r)| r.clone())
        .min()
        .expect("fiber bounds always present");
    let floor = match surviving.first() {
        Some((_, best)) => known_min.min(threshold.clone()).min(best.clone()),
        None => known_min,
    };
    Ok(SearchReport {
        surviving,
        known,
        floor,
        box_bound,
        threshold: threshold.clone(),
    })
}

/// Calls `f` on every nonempty nonincreasing vector with entries in
/// `[1, max_first]` and length at most `npoints`.
fn visit_mult_vectors(
    max_first: u64,
    npoints: usize,
    stack: &mut Vec<u64>,
    f: &mut impl FnMut(&[u64]),
) {
    for m in 1..=max_first {
        stack.push(m);
        f(stack);
        if stack.len() < npoints {
            visit_mult_vectors(m, npoints, stack, f);
        }
        stack.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cxc::{epsilon_fiber_one_point, epsilon_fiber_two_points, TwoPointConfig};
    use crate::lattice::canonical_class;

    fn gen(g: i64) -> Genus {
        Genus::new(g).unwrap()
    }

    #[test]
    fn xu_floor_examples() {
        assert_eq!(xu_floor(&[1, 1, 1]).unwrap(), BigInt::from(2));
        assert_eq!(xu_floor(&[2, 1]).unwrap(), BigInt::from(4));
        assert_eq!(xu_floor(&[5]).unwrap(), BigInt::from(20));
        assert!(xu_floor(&[]).is_err());
        assert!(xu_floor(&[1, 0]).is_err());
    }

    #[test]
    fn adjunction_examples() {
        let f1 = DivisorClass::fiber1();
        for g in 2i64..=10 {
            let gg = gen(g);
            let c = CandidateCurve::new(f1.clone(), vec![1]).unwrap();
            assert!(adjunction_filter(&c, &gg));
        }
        // F1 with multiplicity 2 passes adjunction (1 <= 2) ...
        let g2 = gen(2);
        let c = CandidateCurve::new(f1.clone(), vec![2]).unwrap();
        assert!(adjunction_filter(&c, &g2));
        // ... but Bezout kills it: F1.F1 = 0 < 2
        assert!(!bezout_filter(&c));
        // a class with p_a < sum m(m-1)/2 fails
        let c = CandidateCurve::new(DivisorClass::new(1, 1, 0), vec![4]).unwrap();
        assert!(!adjunction_filter(&c, &g2));
    }

    #[test]
    fn bezout_examples() {
        let one = |cls| CandidateCurve::new(cls, vec![1]).unwrap();
        assert!(bezout_filter(&one(DivisorClass::new(1, 1, 0))));
        assert!(!bezout_filter(
            &CandidateCurve::new(DivisorClass::new(1, 1, 0), vec![2]).unwrap()
        ));
        assert!(bezout_filter(&one(DivisorClass::diagonal())));
    }

    #[test]
    fn fibers_pass_hodge_for_ample_l() {
        for g in 2i64..=10 {
            let gg = gen(g);
            let k = canonical_class(&gg);
            for f in [DivisorClass::fiber1(), DivisorClass::fiber2()] {
                assert!(hodge_gap(&k, &f, &gg).unwrap() >= BigInt::zero());
            }
        }
    }

    #[test]
    fn known_bound_examples() {
        let g2 = gen(2);
        let l = DivisorClass::new(2, 3, 0);
        let shared_f1 = PointConfig::two(TwoPointConfig::SameFiberF1);
        let bounds = known_curve_bounds(&l, &g2, &shared_f1).unwrap();
        assert_eq!(bounds[0], (DivisorClass::fiber1(), ratio(3, 2)));
        assert_eq!(bounds[1], (DivisorClass::fiber2(), rat(2)));

        let general = PointConfig::two(TwoPointConfig::General);
        let bounds = known_curve_bounds(&l, &g2, &general).unwrap();
        assert_eq!(bounds[0], (DivisorClass::fiber1(), rat(3)));
        assert_eq!(bounds[1], (DivisorClass::fiber2(), rat(2)));

        let l = DivisorClass::new(20, 35, -10);
        let bounds = known_curve_bounds(&l, &g2, &PointConfig::single()).unwrap();
        assert_eq!(bounds[0], (DivisorClass::fiber1(), rat(25)));
        assert_eq!(bounds[1], (DivisorClass::fiber2(), rat(10)));
    }

    #[test]
    fn diagonal_offered_only_when_incident() {
        let g2 = gen(2);
        let l = DivisorClass::new(2, 3, 0);
        let plain = known_curve_bounds(&l, &g2, &PointConfig::single()).unwrap();
        assert_eq!(plain.len(), 2);
        let diag = PointConfig::new(1, 1, 1, true).unwrap();
        let with_diag = known_curve_bounds(&l, &g2, &diag).unwrap();
        assert_eq!(with_diag.len(), 3);
        // L.delta = 2 + 3 - 0 = 5
        assert_eq!(with_diag[2], (DivisorClass::diagonal(), rat(5)));
    }

    #[test]
    fn search_examples() {
        let g2 = gen(2);
        // Bezout forces L.C >= 5m for non-fiber classes, ratio >= 5
        let r = enumerate_candidates(
            &DivisorClass::new(2, 3, 0),
            &g2,
            &PointConfig::single(),
            6,
            &rat(2),
        )
        .unwrap();
        assert!(r.surviving.is_empty());
        assert_eq!(r.floor, rat(2));

        let r = enumerate_candidates(
            &DivisorClass::new(1, 1, 0),
            &g2,
            &PointConfig::single(),
            6,
            &rat(1),
        )
        .unwrap();
        assert!(r.surviving.is_empty());
        assert_eq!(r.floor, rat(1));

        // K_X at one point: non-fiber candidates have ratio >= K.(F1+F2) = 4,
        // so nothing survives below 3; the fiber bound K.F = 2(g-1) = 2 remains
        let k = canonical_class(&g2);
        let r = enumerate_candidates(&k, &g2, &PointConfig::single(), 4, &rat(3)).unwrap();
        assert!(r.surviving.is_empty());
        assert_eq!(r.floor, rat(2));

        assert!(enumerate_candidates(
            &DivisorClass::new(1, 1, 1),
            &g2,
            &PointConfig::single(),
            4,
            &rat(1)
        )
        .is_err());
    }

    #[test]
    fn agreement_with_closed_forms_small() {
        for g in [2i64, 3] {
            let gg = gen(g);
            for a in 1i64..=3 {
                for b in 1i64..=3 {
                    let l = DivisorClass::new(a, b, 0);
                    let eps = epsilon_fiber_one_point(&a.into(), &b.into()).unwrap();
                    let r =
                        enumerate_candidates(&l, &gg, &PointConfig::single(), 6, &eps).unwrap();
                    assert!(r.surviving.is_empty());
                    assert_eq!(r.floor, eps);
                    for cfg in [
                        TwoPointConfig::SameFiberF1,
                        TwoPointConfig::SameFiberF2,
                        TwoPointConfig::General,
                    ] {
                        let eps2 =
                            epsilon_fiber_two_points(&a.into(), &b.into(), cfg).unwrap();
                        let r = enumerate_candidates(
                            &l,
                            &gg,
                            &PointConfig::two(cfg),
                            6,
                            &eps2,
                        )
                        .unwrap();
                        assert!(r.surviving.is_empty(), "a={a} b={b} g={g} {cfg:?}");
                        assert_eq!(r.floor, eps2);
                    }
                }
            }
        }
    }

    #[test]
    fn box_monotonicity_and_determinism() {
        let g2 = gen(2);
        let k = canonical_class(&g2);
        // threshold above the fiber bound so that survivors exist
        let t = rat(9);
        let small = enumerate_candidates(&k, &g2, &PointConfig::single(), 3, &t).unwrap();
        let large = enumerate_candidates(&k, &g2, &PointConfig::single(), 5, &t).unwrap();
        assert!(!small.surviving.is_empty());
        for s in &small.surviving {
            assert!(large.surviving.contains(s));
        }
        let again = enumerate_candidates(&k, &g2, &PointConfig::single(), 5, &t).unwrap();
        assert_eq!(large, again);
    }

    #[test]
    fn config_validation() {
        assert!(PointConfig::very_general(0).is_err());
        assert!(PointConfig::new(2, 2, 2, false).is_err());
        assert!(PointConfig::new(2, 3, 1, false).is_err());
        assert!(PointConfig::new(3, 2, 2, false).is_ok());
    }
}
