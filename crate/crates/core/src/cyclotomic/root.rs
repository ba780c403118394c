use std::fmt;

use num_integer::Integer;

use super::CyclotomicNumber;
use crate::scalar::Scalar;

/// An exact root of unity `exp(2πi · exponent / order)`.
///
/// Stored in lowest terms, so `order` is the multiplicative order and two
/// roots are equal exactly when their fields are equal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootOfUnity {
    order: u32,
    exponent: u32,
}

impl RootOfUnity {
    pub const ONE: RootOfUnity = RootOfUnity { order: 1, exponent: 0 };
    pub const MINUS_ONE: RootOfUnity = RootOfUnity { order: 2, exponent: 1 };

    /// `ζ_conductor^exponent`, reduced to lowest terms.
    pub fn new(exponent: i64, conductor: u32) -> Self {
        assert!(conductor > 0, "root of unity needs a positive conductor");
        let n = conductor as i64;
        let e = exponent.rem_euclid(n);
        let g = e.gcd(&n);
        RootOfUnity {
            order: (n / g) as u32,
            exponent: (e / g) as u32,
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn is_one(&self) -> bool {
        self.order == 1
    }

    /// Exponent of this root when written over `conductor`, if it lies in
    /// the `conductor`-th roots of unity.
    pub fn exponent_over(&self, conductor: u32) -> Option<u32> {
        if conductor % self.order != 0 {
            return None;
        }
        Some(self.exponent * (conductor / self.order))
    }

    pub fn mul(&self, other: &RootOfUnity) -> RootOfUnity {
        let l = self.order.lcm(&other.order);
        let a = self.exponent as i64 * (l / self.order) as i64;
        let b = other.exponent as i64 * (l / other.order) as i64;
        RootOfUnity::new(a + b, l)
    }

    pub fn inverse(&self) -> RootOfUnity {
        RootOfUnity::new(-(self.exponent as i64), self.order)
    }

    pub fn div(&self, other: &RootOfUnity) -> RootOfUnity {
        self.mul(&other.inverse())
    }

    pub fn pow(&self, e: i64) -> RootOfUnity {
        RootOfUnity::new(self.exponent as i64 * e, self.order)
    }

    /// Some `m`-th root of this root: `ζ_{order·m}^{exponent}`.
    pub fn root(&self, m: u32) -> RootOfUnity {
        RootOfUnity::new(self.exponent as i64, self.order * m)
    }

    /// Embeds the root into `ℚ(ζ_conductor)`; `None` if it does not live there.
    pub fn to_cyclotomic<T: Scalar>(&self, conductor: u32) -> Option<CyclotomicNumber<T>> {
        self.exponent_over(conductor)
            .map(|e| CyclotomicNumber::zeta_pow(conductor, e as i64))
    }

    /// Embeds the root into its own field `ℚ(ζ_order)`.
    pub fn to_cyclotomic_minimal<T: Scalar>(&self) -> CyclotomicNumber<T> {
        CyclotomicNumber::zeta_pow(self.order, self.exponent as i64)
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.order, self.exponent) {
            (1, _) => write!(f, "1"),
            (2, _) => write!(f, "-1"),
            (n, 1) => write!(f, "z{n}"),
            (n, e) => write!(f, "z{n}^{e}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms() {
        assert_eq!(RootOfUnity::new(2, 4), RootOfUnity::MINUS_ONE);
        assert_eq!(RootOfUnity::new(-3, 3), RootOfUnity::ONE);
        assert_eq!(RootOfUnity::new(6, 8).order(), 4);
    }

    #[test]
    fn group_law() {
        let i = RootOfUnity::new(1, 4);
        assert_eq!(i.mul(&i), RootOfUnity::MINUS_ONE);
        assert_eq!(i.mul(&i.inverse()), RootOfUnity::ONE);
        let w = RootOfUnity::new(1, 3);
        assert_eq!(w.mul(&RootOfUnity::MINUS_ONE).order(), 6);
        assert_eq!(RootOfUnity::MINUS_ONE.root(2), i);
    }

    #[test]
    fn exponent_over_larger_conductor() {
        let w = RootOfUnity::new(1, 3);
        assert_eq!(w.exponent_over(6), Some(2));
        assert_eq!(w.exponent_over(4), None);
    }
}
