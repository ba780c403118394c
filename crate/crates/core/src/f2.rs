//! Polynomial model of `H*(B(ℤ/2)^k; F₂) = F₂[x₁, …, x_k]`, the first
//! Steenrod square, and inverse transgression along elements of `(ℤ/2)^k`.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::expr::{self, Algebra, ParseError};
use crate::group::{Character, FiniteAbelianGroup, GroupElement};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum F2Error {
    #[error("polynomials in {left} and {right} variables cannot be combined")]
    VariableCount { left: usize, right: usize },
    #[error("element {element} is not in (Z/2)^{k}")]
    NotInElementaryGroup { element: String, k: usize },
    #[error("{0} is not a sum of squares x_i^2")]
    NotSquareClass(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Exponent vector of a monomial. Ordered graded-lexicographically with
/// `x₁ > x₂ > … > x_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn times(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn shifted(&self, i: usize, up: bool) -> Monomial {
        let mut e = self.0.clone();
        if up {
            e[i] += 1;
        } else {
            e[i] -= 1;
        }
        Monomial(e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial over `F₂` in a fixed number of variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct F2Polynomial {
    k: usize,
    terms: BTreeSet<Monomial>,
}

impl F2Polynomial {
    pub fn zero(k: usize) -> Self {
        F2Polynomial {
            k,
            terms: BTreeSet::new(),
        }
    }

    pub fn one(k: usize) -> Self {
        Self::monomial(&vec![0; k])
    }

    pub fn monomial(exponents: &[u32]) -> Self {
        let mut p = Self::zero(exponents.len());
        p.terms.insert(Monomial(exponents.to_vec()));
        p
    }

    /// The generator `x_{i+1}` (zero-based `i`).
    pub fn var(k: usize, i: usize) -> Self {
        let mut e = vec![0; k];
        e[i] = 1;
        Self::monomial(&e)
    }

    /// Sum of the given monomials, cancelling repeats in pairs.
    pub fn from_monomials(k: usize, monomials: impl IntoIterator<Item = Vec<u32>>) -> Self {
        let mut p = Self::zero(k);
        for m in monomials {
            assert_eq!(m.len(), k, "monomial has the wrong number of variables");
            p.toggle(Monomial(m));
        }
        p
    }

    fn toggle(&mut self, m: Monomial) {
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    pub fn num_vars(&self) -> usize {
        self.k
    }

    /// Monomials in decreasing graded-lex order.
    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter().rev()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree of the leading monomial; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().next_back().map(Monomial::degree)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.iter().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    fn same_k(&self, other: &Self) -> Result<(), F2Error> {
        if self.k == other.k {
            Ok(())
        } else {
            Err(F2Error::VariableCount {
                left: self.k,
                right: other.k,
            })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, F2Error> {
        self.same_k(other)?;
        Ok(F2Polynomial {
            k: self.k,
            terms: self.terms.symmetric_difference(&other.terms).cloned().collect(),
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self, F2Error> {
        self.same_k(other)?;
        let mut p = Self::zero(self.k);
        for a in &self.terms {
            for b in &other.terms {
                p.toggle(a.times(b));
            }
        }
        Ok(p)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.k);
        for _ in 0..e {
            acc = acc.mul(self).expect("same k");
        }
        acc
    }

    /// `Sq¹`, the derivation with `Sq¹(xᵢ) = xᵢ²`.
    pub fn sq1(&self) -> Self {
        let mut p = Self::zero(self.k);
        for m in &self.terms {
            for (i, &e) in m.0.iter().enumerate() {
                if e % 2 == 1 {
                    p.toggle(m.shifted(i, true));
                }
            }
        }
        p
    }

    /// Integral classes are the kernel of `Sq¹` (the Bockstein).
    pub fn is_integral(&self) -> bool {
        self.sq1().is_zero()
    }

    fn check_element(&self, g: &GroupElement) -> Result<(), F2Error> {
        if g.orders().len() != self.k || g.orders().iter().any(|&n| n != 2) {
            return Err(F2Error::NotInElementaryGroup {
                element: g.to_string(),
                k: self.k,
            });
        }
        Ok(())
    }

    /// Inverse transgression along `g = (a₁, …, a_k)`: the derivation
    /// `Σ aᵢ ∂/∂xᵢ` over `F₂`.
    pub fn inverse_transgress(&self, g: &GroupElement) -> Result<Self, F2Error> {
        self.check_element(g)?;
        let mut p = Self::zero(self.k);
        for m in &self.terms {
            for (i, (&e, &a)) in m.0.iter().zip(g.residues()).enumerate() {
                if a == 1 && e % 2 == 1 {
                    p.toggle(m.shifted(i, false));
                }
            }
        }
        Ok(p)
    }

    /// `τ_h τ_g p`.
    pub fn double_transgress(&self, g: &GroupElement, h: &GroupElement) -> Result<Self, F2Error> {
        self.inverse_transgress(g)?.inverse_transgress(h)
    }

    /// Reads a class `Σ cᵢ xᵢ²` as the character `k ↦ (−1)^{Σ cᵢ kᵢ}` of
    /// `(ℤ/2)^k`. Any other monomial is rejected.
    pub fn character_of_square_class(&self) -> Result<Character, F2Error> {
        let mut exps = vec![0i64; self.k];
        for m in &self.terms {
            let mut support = m.0.iter().enumerate().filter(|(_, &e)| e != 0);
            match (support.next(), support.next()) {
                (Some((i, 2)), None) => exps[i] = 1,
                _ => return Err(F2Error::NotSquareClass(self.to_string())),
            }
        }
        Ok(FiniteAbelianGroup::elementary_2(self.k.max(1))
            .character(&exps)
            .expect("length matches"))
    }

    /// Parses e.g. `x1^2*x2 + sq1(x1*x2*x3)` in `k` variables.
    pub fn parse(text: &str, k: usize) -> Result<Self, F2Error> {
        Ok(expr::parse(&F2Algebra { k }, text)?)
    }
}

/// `Sq¹(x₁x₂x₃) = x₁²x₂x₃ + x₁x₂²x₃ + x₁x₂x₃²`, an integral degree-4 class
/// of `B(ℤ/2)³` with nontrivial transgressions.
pub fn alpha() -> F2Polynomial {
    F2Polynomial::monomial(&[1, 1, 1]).sq1()
}

impl fmt::Display for F2Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for m in self.monomials() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let factors: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| match e {
                    1 => format!("x{}", i + 1),
                    _ => format!("x{}^{}", i + 1, e),
                })
                .collect();
            if factors.is_empty() {
                write!(f, "1")?;
            } else {
                write!(f, "{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

struct F2Algebra {
    k: usize,
}

impl Algebra for F2Algebra {
    type Value = F2Polynomial;

    fn integer(&self, v: i64) -> Result<F2Polynomial, String> {
        Ok(if v % 2 == 0 {
            F2Polynomial::zero(self.k)
        } else {
            F2Polynomial::one(self.k)
        })
    }

    fn variable(&self, name: &str) -> Result<F2Polynomial, String> {
        let i = name
            .strip_prefix('x')
            .and_then(|s| s.parse::<usize>().ok())
            .filter(|&i| (1..=self.k).contains(&i))
            .ok_or_else(|| format!("unknown variable {name:?} (expected x1..x{})", self.k))?;
        Ok(F2Polynomial::var(self.k, i - 1))
    }

    fn add(&self, a: F2Polynomial, b: F2Polynomial) -> Result<F2Polynomial, String> {
        a.add(&b).map_err(|e| e.to_string())
    }

    fn neg(&self, a: F2Polynomial) -> Result<F2Polynomial, String> {
        Ok(a)
    }

    fn mul(&self, a: F2Polynomial, b: F2Polynomial) -> Result<F2Polynomial, String> {
        a.mul(&b).map_err(|e| e.to_string())
    }

    fn pow(&self, a: F2Polynomial, e: u32) -> Result<F2Polynomial, String> {
        Ok(a.pow(e))
    }

    fn call(&self, name: &str, arg: F2Polynomial) -> Result<F2Polynomial, String> {
        match name {
            "sq1" | "Sq1" => Ok(arg.sq1()),
            _ => Err(format!("unknown function {name:?} (only sq1 is defined)")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> F2Polynomial {
        F2Polynomial::var(3, i - 1)
    }

    fn z2_3() -> FiniteAbelianGroup {
        FiniteAbelianGroup::elementary_2(3)
    }

    #[test]
    fn ring_operations() {
        assert!(x(1).add(&x(1)).unwrap().is_zero());
        assert_eq!(x(1).mul(&x(2)).unwrap(), F2Polynomial::monomial(&[1, 1, 0]));
        let s = x(1).add(&x(2)).unwrap();
        let expected = x(1).pow(2).add(&x(2).pow(2)).unwrap();
        assert_eq!(s.pow(2), expected);
        assert!(x(1).add(&F2Polynomial::var(2, 0)).is_err());
    }

    #[test]
    fn sq1_examples() {
        let a = alpha();
        assert_eq!(a.to_string(), "x1^2*x2*x3 + x1*x2^2*x3 + x1*x2*x3^2");
        assert!(a.sq1().is_zero());
        assert!(x(2).pow(2).sq1().is_zero());
        assert!(a.is_integral());
        assert!(!F2Polynomial::monomial(&[1, 1, 1]).is_integral());
        assert!(x(1).pow(2).is_integral());
        assert_eq!(a.degree(), Some(4));
        assert!(a.is_homogeneous());
    }

    #[test]
    fn transgression_examples() {
        let g = z2_3();
        let a = alpha();
        let t = a.inverse_transgress(&g.element(&[1, 0, 0]).unwrap()).unwrap();
        assert_eq!(t.to_string(), "x2^2*x3 + x2*x3^2");
        assert!(F2Polynomial::one(3).inverse_transgress(&g.element(&[1, 1, 1]).unwrap()).unwrap().is_zero());
        let all = a.inverse_transgress(&g.element(&[1, 1, 1]).unwrap()).unwrap();
        let expected = F2Polynomial::parse(
            "x2^2*x3 + x2*x3^2 + x3^2*x1 + x3*x1^2 + x1^2*x2 + x1*x2^2",
            3,
        )
        .unwrap();
        assert_eq!(all, expected);
        let z4 = FiniteAbelianGroup::cyclic(4).unwrap();
        assert!(a.inverse_transgress(&z4.generator(0)).is_err());
    }

    #[test]
    fn double_transgression_examples() {
        let g = z2_3();
        let a = alpha();
        let e = |r: &[i64]| g.element(r).unwrap();
        let d = a.double_transgress(&e(&[1, 0, 0]), &e(&[0, 1, 0])).unwrap();
        assert_eq!(d, x(3).pow(2));
        assert!(a.double_transgress(&e(&[1, 1, 0]), &e(&[1, 1, 0])).unwrap().is_zero());
        let d = a.double_transgress(&e(&[1, 1, 0]), &e(&[0, 1, 1])).unwrap();
        assert_eq!(d.to_string(), "x1^2 + x2^2 + x3^2");
    }

    #[test]
    fn square_class_characters() {
        let g = z2_3();
        assert_eq!(x(3).pow(2).character_of_square_class().unwrap(), g.character(&[0, 0, 1]).unwrap());
        assert!(F2Polynomial::zero(3).character_of_square_class().unwrap().is_trivial());
        let c = F2Polynomial::parse("x1^2 + x2^2", 3).unwrap();
        assert_eq!(c.character_of_square_class().unwrap(), g.character(&[1, 1, 0]).unwrap());
        let cross = F2Polynomial::parse("x1*x2", 3).unwrap();
        assert!(matches!(cross.character_of_square_class(), Err(F2Error::NotSquareClass(_))));
        assert!(x(1).character_of_square_class().is_err());
    }

    #[test]
    fn parse_and_display() {
        let p = F2Polynomial::parse("sq1(x1*x2*x3)", 3).unwrap();
        assert_eq!(p, alpha());
        assert_eq!(F2Polynomial::parse(&p.to_string(), 3).unwrap(), p);
        assert_eq!(F2Polynomial::parse("x1 + x1 + 3", 3).unwrap(), F2Polynomial::one(3));
        assert_eq!(F2Polynomial::parse("-x2", 3).unwrap(), x(2));
        assert!(F2Polynomial::parse("x4", 3).is_err());
        assert!(F2Polynomial::parse("x1/x2", 3).is_err());
        assert!(F2Polynomial::parse("foo(x1)", 3).is_err());
        assert_eq!(F2Polynomial::zero(3).to_string(), "0");
        assert_eq!(F2Polynomial::one(3).to_string(), "1");
    }
}
