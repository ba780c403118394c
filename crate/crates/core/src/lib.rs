//! Twisted stringy K-theory computations for global quotients by finite
//! abelian groups: transgressions of group cohomology classes, twisted
//! sector ranks, the stringy product, and the weighted projective line
//! `ℂP[p:1:…:1]`.
//!
//! Numeric code is generic over a [`Scalar`]; the aliases below fix it to
//! exact rationals.

pub mod cyclotomic;
pub mod expr;
pub mod f2;
pub mod groebner;
pub mod group;
pub mod scalar;
pub mod sector;
pub mod stringy;
pub mod wproj;

pub use scalar::Scalar;

/// Arbitrary-precision rationals, the default scalar.
pub type Rational = num_rational::BigRational;

/// `ℚ(ζ_n)` over [`Rational`].
pub type Cyclotomic = cyclotomic::CyclotomicNumber<Rational>;
