//! Coefficient scalars.
//!
//! Every linear-algebraic object in the crate (cyclotomic numbers, K-classes,
//! the weighted projective ring) is generic over a [`Scalar`]. The crate
//! root fixes the default to [`BigRational`](num_rational::BigRational);
//! `Rational64` works too and is handy in tests when overflow is not a
//! concern.

use std::fmt::{Debug, Display};

use num_traits::{FromPrimitive, Num, Signed};

/// A field of characteristic zero with exact equality.
///
/// The bound is satisfied by `num_rational::Ratio<i64>` and
/// `num_rational::Ratio<BigInt>`. Floating point types also satisfy it
/// syntactically, but nothing in this crate is meaningful with inexact
/// equality.
pub trait Scalar:
    Clone + Debug + Display + PartialEq + Num + Signed + FromPrimitive + Send + Sync + 'static
{
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("every scalar type embeds the integers")
    }

    fn from_frac(num: i64, den: i64) -> Self {
        Self::from_int(num) / Self::from_int(den)
    }
}

impl<T> Scalar for T where
    T: Clone + Debug + Display + PartialEq + Num + Signed + FromPrimitive + Send + Sync + 'static
{
}
