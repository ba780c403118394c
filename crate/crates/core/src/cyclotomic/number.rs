use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer;

use super::CycloError;
use crate::expr::{self, Algebra, ParseError};
use crate::scalar::Scalar;

/// Integer coefficients of the `n`-th cyclotomic polynomial, lowest degree
/// first. The polynomial is monic.
pub fn cyclotomic_polynomial(n: u32) -> Arc<[i64]> {
    assert!(n > 0, "cyclotomic polynomial of index 0");
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<[i64]>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by every Φ_d with d a proper divisor of n
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            num = exact_div_monic(&num, &cyclotomic_polynomial(d));
        }
    }
    let p: Arc<[i64]> = num.into();
    cache.lock().unwrap().insert(n, p.clone());
    p
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - dn];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dn];
        quot[i] = c;
        for (j, &dj) in den.iter().enumerate() {
            rem[i + j] -= c * dj;
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0), "cyclotomic division not exact");
    quot
}

/// Euler's totient, the degree of `ℚ(ζ_n)` over `ℚ`.
pub fn euler_phi(n: u32) -> u32 {
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as u32
}

/// An exact element of the cyclotomic field `ℚ(ζ_n)`.
///
/// Represented by its coordinates in the power basis `1, ζ, …, ζ^{φ(n)-1}`;
/// every product is reduced modulo `Φ_n`, so the representation is
/// canonical for a fixed conductor. Values of different conductors are
/// compared and combined in `ℚ(ζ_lcm)`.
#[derive(Clone, Debug)]
pub struct CyclotomicNumber<T> {
    conductor: u32,
    coeffs: Vec<T>,
}

impl<T: Scalar> CyclotomicNumber<T> {
    pub fn zero(conductor: u32) -> Self {
        let d = euler_phi(conductor) as usize;
        CyclotomicNumber {
            conductor,
            coeffs: vec![T::zero(); d],
        }
    }

    pub fn one(conductor: u32) -> Self {
        Self::from_scalar(conductor, T::one())
    }

    pub fn from_scalar(conductor: u32, value: T) -> Self {
        let mut z = Self::zero(conductor);
        z.coeffs[0] = value;
        z
    }

    pub fn from_int(conductor: u32, value: i64) -> Self {
        Self::from_scalar(conductor, T::from_int(value))
    }

    /// The generator `ζ_n`.
    pub fn zeta(conductor: u32) -> Self {
        Self::zeta_pow(conductor, 1)
    }

    /// `ζ_n^k` for any integer `k`.
    pub fn zeta_pow(conductor: u32, k: i64) -> Self {
        let e = k.rem_euclid(conductor as i64) as usize;
        let mut c = vec![T::zero(); e + 1];
        c[e] = T::one();
        Self::from_poly(conductor, c)
    }

    /// Reduces an arbitrary polynomial in `ζ_n` (lowest degree first).
    pub fn from_poly(conductor: u32, coeffs: Vec<T>) -> Self {
        CyclotomicNumber {
            conductor,
            coeffs: reduce(conductor, coeffs),
        }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|c| c.is_one())
    }

    /// The rational value, if this number lies in `ℚ`.
    pub fn as_rational(&self) -> Option<T> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Re-expresses the number in `ℚ(ζ_m)`; requires `n | m`.
    pub fn promote(&self, m: u32) -> Result<Self, CycloError> {
        if m % self.conductor != 0 {
            return Err(CycloError::ConductorMismatch {
                from: self.conductor,
                to: m,
            });
        }
        if m == self.conductor {
            return Ok(self.clone());
        }
        let step = (m / self.conductor) as usize;
        let mut c = vec![T::zero(); (self.coeffs.len() - 1) * step + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            c[i * step] = a.clone();
        }
        Ok(Self::from_poly(m, c))
    }

    fn aligned(&self, other: &Self) -> (Self, Self) {
        let l = self.conductor.lcm(&other.conductor);
        (
            self.promote(l).expect("lcm is a multiple"),
            other.promote(l).expect("lcm is a multiple"),
        )
    }

    pub fn scale(&self, s: &T) -> Self {
        CyclotomicNumber {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c.clone() * s.clone()).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.conductor);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse by solving `self · x = 1` in the power basis.
    pub fn inverse(&self) -> Result<Self, CycloError> {
        if self.is_zero() {
            return Err(CycloError::ZeroInverse);
        }
        let d = self.coeffs.len();
        // column j holds self · ζ^j
        let mut m: Vec<Vec<T>> = vec![Vec::with_capacity(d + 1); d];
        let mut col = self.clone();
        let z = Self::zeta(self.conductor);
        for _ in 0..d {
            for (row, c) in m.iter_mut().zip(&col.coeffs) {
                row.push(c.clone());
            }
            col = &col * &z;
        }
        for (i, row) in m.iter_mut().enumerate() {
            row.push(if i == 0 { T::one() } else { T::zero() });
        }
        let x = solve(m).ok_or(CycloError::ZeroInverse)?;
        Ok(CyclotomicNumber {
            conductor: self.conductor,
            coeffs: x,
        })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, CycloError> {
        Ok(self * &other.inverse()?)
    }
}

fn reduce<T: Scalar>(conductor: u32, mut c: Vec<T>) -> Vec<T> {
    let phi = cyclotomic_polynomial(conductor);
    let d = phi.len() - 1;
    if c.len() > d {
        for i in (d..c.len()).rev() {
            let lead = std::mem::replace(&mut c[i], T::zero());
            if lead.is_zero() {
                continue;
            }
            for (j, &pj) in phi[..d].iter().enumerate() {
                if pj != 0 {
                    let t = lead.clone() * T::from_int(pj);
                    c[i - d + j] = c[i - d + j].clone() - t;
                }
            }
        }
    }
    c.resize(d, T::zero());
    c
}

/// Gauss–Jordan on an augmented square system; `None` when singular.
fn solve<T: Scalar>(mut m: Vec<Vec<T>>) -> Option<Vec<T>> {
    let n = m.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let p = m[col][col].clone();
        for x in m[col].iter_mut() {
            *x = x.clone() / p.clone();
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for k in col..=n {
                    let t = f.clone() * m[col][k].clone();
                    m[r][k] = m[r][k].clone() - t;
                }
            }
        }
    }
    Some(m.into_iter().map(|mut row| row.pop().unwrap()).collect())
}

impl<T: Scalar> PartialEq for CyclotomicNumber<T> {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.aligned(other);
        a.coeffs == b.coeffs
    }
}

impl<'a, T: Scalar> Add<&'a CyclotomicNumber<T>> for &'a CyclotomicNumber<T> {
    type Output = CyclotomicNumber<T>;
    fn add(self, rhs: &'a CyclotomicNumber<T>) -> CyclotomicNumber<T> {
        if self.conductor != rhs.conductor {
            let (a, b) = self.aligned(rhs);
            return &a + &b;
        }
        CyclotomicNumber {
            conductor: self.conductor,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(x, y)| x.clone() + y.clone())
                .collect(),
        }
    }
}

impl<'a, T: Scalar> Sub<&'a CyclotomicNumber<T>> for &'a CyclotomicNumber<T> {
    type Output = CyclotomicNumber<T>;
    fn sub(self, rhs: &'a CyclotomicNumber<T>) -> CyclotomicNumber<T> {
        self + &(-rhs)
    }
}

impl<'a, T: Scalar> Mul<&'a CyclotomicNumber<T>> for &'a CyclotomicNumber<T> {
    type Output = CyclotomicNumber<T>;
    fn mul(self, rhs: &'a CyclotomicNumber<T>) -> CyclotomicNumber<T> {
        if self.conductor != rhs.conductor {
            let (a, b) = self.aligned(rhs);
            return &a * &b;
        }
        let d = self.coeffs.len();
        let mut c = vec![T::zero(); 2 * d - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    c[i + j] = c[i + j].clone() + x.clone() * y.clone();
                }
            }
        }
        CyclotomicNumber::from_poly(self.conductor, c)
    }
}

impl<T: Scalar> Neg for &CyclotomicNumber<T> {
    type Output = CyclotomicNumber<T>;
    fn neg(self) -> CyclotomicNumber<T> {
        CyclotomicNumber {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Scalar> $tr for CyclotomicNumber<T> {
            type Output = CyclotomicNumber<T>;
            fn $m(self, rhs: CyclotomicNumber<T>) -> CyclotomicNumber<T> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Scalar> Neg for CyclotomicNumber<T> {
    type Output = CyclotomicNumber<T>;
    fn neg(self) -> CyclotomicNumber<T> {
        -&self
    }
}

impl<T: Scalar> fmt::Display for CyclotomicNumber<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (i, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (_, true) => {}
                (_, false) => write!(f, "{a}*")?,
            }
            match i {
                0 => {}
                1 => write!(f, "z")?,
                _ => write!(f, "z^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

struct CycloAlgebra<T> {
    conductor: u32,
    _scalar: std::marker::PhantomData<T>,
}

impl<T: Scalar> Algebra for CycloAlgebra<T> {
    type Value = CyclotomicNumber<T>;

    fn integer(&self, v: i64) -> Result<Self::Value, String> {
        Ok(CyclotomicNumber::from_int(self.conductor, v))
    }

    fn variable(&self, name: &str) -> Result<Self::Value, String> {
        match name {
            "z" | "ζ" => Ok(CyclotomicNumber::zeta(self.conductor)),
            _ => Err(format!("unknown symbol {name:?} (only z is allowed)")),
        }
    }

    fn add(&self, a: Self::Value, b: Self::Value) -> Result<Self::Value, String> {
        Ok(&a + &b)
    }

    fn neg(&self, a: Self::Value) -> Result<Self::Value, String> {
        Ok(-&a)
    }

    fn mul(&self, a: Self::Value, b: Self::Value) -> Result<Self::Value, String> {
        Ok(&a * &b)
    }

    fn pow(&self, a: Self::Value, e: u32) -> Result<Self::Value, String> {
        Ok(a.pow(e))
    }

    fn div(&self, a: Self::Value, b: Self::Value) -> Result<Self::Value, String> {
        a.checked_div(&b).map_err(|e| e.to_string())
    }
}

impl<T: Scalar> CyclotomicNumber<T> {
    /// Parses a literal such as `1 - z`, `(1-z)^2` or `3/2*z^2` in `ℚ(ζ_n)`.
    pub fn parse(text: &str, conductor: u32) -> Result<Self, ParseError> {
        expr::parse(
            &CycloAlgebra::<T> {
                conductor,
                _scalar: std::marker::PhantomData,
            },
            text,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64;

    type C = CyclotomicNumber<Rational64>;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(&*cyclotomic_polynomial(1), &[-1, 1]);
        assert_eq!(&*cyclotomic_polynomial(2), &[1, 1]);
        assert_eq!(&*cyclotomic_polynomial(4), &[1, 0, 1]);
        assert_eq!(&*cyclotomic_polynomial(6), &[1, -1, 1]);
        assert_eq!(&*cyclotomic_polynomial(12), &[1, 0, -1, 0, 1]);
        // Φ_105 is the first with a coefficient of absolute value 2
        assert!(cyclotomic_polynomial(105).iter().any(|&c| c == -2));
        assert_eq!(euler_phi(105), 48);
    }

    #[test]
    fn small_identities() {
        let one = C::one(2);
        assert_eq!(&one - &C::zeta(2), C::from_int(2, 2));
        let z4 = C::zeta(4);
        assert_eq!(&z4 * &z4, C::from_int(4, -1));
        let z3 = C::zeta(3);
        let a = &C::one(3) - &z3;
        let b = &C::one(3) - &(&z3 * &z3);
        assert_eq!(&a * &b, C::from_int(3, 3));
    }

    #[test]
    fn inverse_and_zero() {
        let a = &C::one(5) - &C::zeta(5);
        let inv = a.inverse().unwrap();
        assert!((&a * &inv).is_one());
        assert_eq!(C::zero(5).inverse(), Err(CycloError::ZeroInverse));
    }

    #[test]
    fn mixed_conductors_promote() {
        // ζ_4^2 = -1 = ζ_2
        assert_eq!(C::zeta_pow(4, 2), C::zeta(2));
        let s = &C::zeta(3) + &C::zeta(4);
        assert_eq!(s.conductor(), 12);
        assert_eq!(C::zeta(3).promote(4), Err(CycloError::ConductorMismatch { from: 3, to: 4 }));
    }

    #[test]
    fn display() {
        let a = &C::one(3) - &C::zeta(3);
        assert_eq!(a.to_string(), "1 - z");
        let b = &a * &a;
        assert_eq!(b.to_string(), "-3*z");
        assert_eq!(C::zero(7).to_string(), "0");
        assert_eq!(C::from_scalar(5, Rational64::new(-1, 2)).to_string(), "-1/2");
    }

    #[test]
    fn parse_round_trips_display() {
        let a = C::parse("(1 - z)^2", 3).unwrap();
        assert_eq!(a, C::from_poly(3, vec![0.into(), Rational64::from_integer(-3)]));
        let b = C::parse("3/2*z^2 - 1/3", 5).unwrap();
        assert_eq!(C::parse(&b.to_string(), 5).unwrap(), b);
        assert!(C::parse("1/(1 - 1)", 5).is_err());
        assert!(C::parse("x", 5).is_err());
    }
}
