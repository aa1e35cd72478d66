//! Scalar abstractions shared by the geometric and linear-algebra modules.
//!
//! Geometry runs over any ordered field ([`OrderedField`]); integer linear
//! algebra runs over any signed Euclidean ring ([`IntScalar`]). The crate
//! root fixes the arbitrary-precision instances used by the combinatorial
//! layers (`Rational`, `Integer`).

use std::fmt::Debug;

use num_integer::Integer as NumInteger;
use num_rational::Ratio;
use num_traits::{Num, Signed};

/// An ordered field with exact or approximate arithmetic.
///
/// Implemented for `Ratio<I>` over any signed integer type (exact) and for
/// `f32`/`f64`. Feasibility decisions are only exact for the rational
/// instances; floating-point instances compare with `==`/`<` directly.
pub trait OrderedField: Clone + Debug + PartialOrd + Num + Signed {
    fn from_i64(v: i64) -> Self;

    fn is_exact() -> bool;
}

impl<I> OrderedField for Ratio<I>
where
    I: Clone + Debug + NumInteger + Signed + From<i64>,
{
    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(I::from(v))
    }

    fn is_exact() -> bool {
        true
    }
}

impl OrderedField for f64 {
    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn is_exact() -> bool {
        false
    }
}

impl OrderedField for f32 {
    fn from_i64(v: i64) -> Self {
        v as f32
    }

    fn is_exact() -> bool {
        false
    }
}

/// A signed integer type usable for Hermite normal forms and fraction-free
/// elimination.
pub trait IntScalar: Clone + Debug + Ord + NumInteger + Signed + From<i64> {}

impl<T> IntScalar for T where T: Clone + Debug + Ord + NumInteger + Signed + From<i64> {}
