//! Exact arithmetic on the Néron–Severi lattice of `C × C` and closed-form
//! Seshadri-constant results for surfaces of general type, with brute-force
//! lattice-enumeration oracles cross-checking every closed form.
//!
//! Everything is computed over arbitrary-precision integers and rationals;
//! there is no floating point anywhere in the library.

pub mod cli;
pub mod cxc;
pub mod exact;
pub mod lattice;
pub mod multipoint;
pub mod search;

use num_bigint::BigInt;
use thiserror::Error;

/// Errors raised by constructors and operations with nontrivial preconditions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("genus must be at least 2, got {0}")]
    GenusTooSmall(BigInt),
    #[error("{what} must be positive, got {value}")]
    NonPositive { what: &'static str, value: BigInt },
    #[error("square root of a negative rational: {0}")]
    NegativeRadicand(String),
    #[error("polarization has nonpositive self-intersection {0}")]
    NotBigClass(BigInt),
    #[error("class ({0}, {1}, {2}) fails the ampleness inequalities")]
    NotAmple(BigInt, BigInt, BigInt),
    #[error("multiplicity vector must be nonempty with entries >= 1")]
    BadMultiplicities,
    #[error("r must be at least 2, got {0}")]
    TooFewPoints(BigInt),
    #[error("{0}")]
    OutOfRange(String),
    #[error("cannot parse {what}: {input}")]
    Parse { what: &'static str, input: String },
}

pub use exact::{cmp_rational_sqrt, ceil_of_ratio, Rational, SqrtQuantity};
pub use lattice::{
    ample_necessary, arithmetic_genus, canonical_class, gram_determinant, hodge_gap,
    is_minus_two_class, DivisorClass, Genus,
};
pub use multipoint::{epsilon_zero_iff, feasible_pairs, phi, possible_values, FeasiblePair};
pub use cxc::{
    cond4_threshold, epsilon_fiber_one_point, epsilon_fiber_two_points, fiber_sum_epsilon,
    rationality_classify, threshold_thm32, thm32_case2_gap, thm32_class_gap, Condition, Fiber,
    RationalityVerdict, TwoPointConfig,
};
pub use search::{
    adjunction_filter, bezout_filter, enumerate_candidates, known_curve_bounds, xu_floor,
    CandidateCurve, PointConfig, SearchReport,
};
