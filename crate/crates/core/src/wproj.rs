//! The stringy K-theory ring of the weighted projective space
//! `ℂP[p:1:…:1]` (`n+1` homogeneous coordinates, `p` prime).
//!
//! The untwisted sector is `ℚ[u]/⟨(1−u)^{n+1}⟩ × ℚ(ζ)`; it is stored in the
//! coordinate `t = 1 − u`, so the first factor is a truncated polynomial
//! `Σ aᵢ tⁱ` with `i ≤ n`. Every twisted sector `g_j` is the fixed point,
//! with ring `ℚ × ℚ(ζ)` (evaluation of a representation at `1` and at `ζ`).

use std::fmt;

use thiserror::Error;

use crate::cyclotomic::{CycloError, CyclotomicNumber};
use crate::expr::{self, Algebra, ParseError};
use crate::groebner::{self, Monomial, Polynomial};
use crate::group::GroupElement;
use crate::scalar::Scalar;
use crate::stringy::{LocalEigenData, StringyError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WprojError {
    #[error("p = {0} is not prime")]
    NotPrime(u32),
    #[error("the dimension n must be at least 1")]
    ZeroDimension,
    #[error("element does not belong to ℂP[{p}:1^{n}]: {reason}")]
    Shape { p: u32, n: u32, reason: String },
    #[error(transparent)]
    Stringy(#[from] StringyError),
    #[error(transparent)]
    Cyclo(#[from] CycloError),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// An element `(f(t), q(ζ))` of `ℚ[t]/⟨t^{n+1}⟩ × ℚ(ζ_p)`.
#[derive(Debug, Clone)]
pub struct WPRingElement<T> {
    poly: Vec<T>,
    cyclo: CyclotomicNumber<T>,
}

impl<T: Scalar> PartialEq for WPRingElement<T> {
    fn eq(&self, other: &Self) -> bool {
        self.poly == other.poly && self.cyclo == other.cyclo
    }
}

impl<T: Scalar> WPRingElement<T> {
    /// Coefficients of `1, t, …, tⁿ`.
    pub fn poly(&self) -> &[T] {
        &self.poly
    }

    pub fn cyclo(&self) -> &CyclotomicNumber<T> {
        &self.cyclo
    }

    pub fn is_zero(&self) -> bool {
        self.poly.iter().all(|c| c.is_zero()) && self.cyclo.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        WPRingElement {
            poly: self.poly.iter().zip(&other.poly).map(|(a, b)| a.clone() + b.clone()).collect(),
            cyclo: &self.cyclo + &other.cyclo,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let len = self.poly.len();
        let mut poly = vec![T::zero(); len];
        for (i, a) in self.poly.iter().enumerate() {
            for (j, b) in other.poly.iter().enumerate().take(len - i) {
                poly[i + j] = poly[i + j].clone() + a.clone() * b.clone();
            }
        }
        WPRingElement {
            poly,
            cyclo: &self.cyclo * &other.cyclo,
        }
    }
}

fn fmt_t_poly<T: Scalar>(poly: &[T], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let mut first = true;
    for (i, c) in poly.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let a = c.abs();
        if first {
            if c.is_negative() {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
        }
        first = false;
        let power = match i {
            0 => String::new(),
            1 => "(1-u)".to_string(),
            _ => format!("(1-u)^{i}"),
        };
        match (i, a.is_one()) {
            (0, _) => write!(f, "{a}")?,
            (_, true) => write!(f, "{power}")?,
            (_, false) => write!(f, "{a}*{power}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl<T: Scalar> fmt::Display for WPRingElement<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        fmt_t_poly(&self.poly, f)?;
        write!(f, ", {})", self.cyclo)
    }
}

/// Value of a stringy element in one sector.
#[derive(Debug, Clone)]
pub enum WPValue<T> {
    Untwisted(WPRingElement<T>),
    Twisted { rational: T, cyclo: CyclotomicNumber<T> },
}

/// A homogeneous element `(·, ·, g_j)` of the stringy ring.
#[derive(Debug, Clone)]
pub struct WPStringyElement<T> {
    sector: u32,
    value: WPValue<T>,
}

impl<T: Scalar> PartialEq for WPStringyElement<T> {
    fn eq(&self, other: &Self) -> bool {
        if self.sector != other.sector {
            return false;
        }
        match (&self.value, &other.value) {
            (WPValue::Untwisted(a), WPValue::Untwisted(b)) => a == b,
            (
                WPValue::Twisted { rational: r, cyclo: q },
                WPValue::Twisted { rational: s, cyclo: w },
            ) => r == s && q == w,
            _ => false,
        }
    }
}

impl<T: Scalar> WPStringyElement<T> {
    pub fn sector(&self) -> u32 {
        self.sector
    }

    pub fn value(&self) -> &WPValue<T> {
        &self.value
    }

    /// The rational coordinates: `f(t)` in the untwisted sector, `r` in a
    /// twisted one.
    pub fn rational_part(&self) -> Vec<T> {
        match &self.value {
            WPValue::Untwisted(x) => x.poly.clone(),
            WPValue::Twisted { rational, .. } => vec![rational.clone()],
        }
    }

    pub fn cyclo_part(&self) -> &CyclotomicNumber<T> {
        match &self.value {
            WPValue::Untwisted(x) => &x.cyclo,
            WPValue::Twisted { cyclo, .. } => cyclo,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rational_part().iter().all(|c| c.is_zero()) && self.cyclo_part().is_zero()
    }

    /// The rational coordinate as text, `f` written in powers of `(1-u)`.
    pub fn rational_string(&self) -> String {
        struct Poly<'a, T>(&'a [T]);
        impl<T: Scalar> fmt::Display for Poly<'_, T> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                fmt_t_poly(self.0, f)
            }
        }
        Poly(&self.rational_part()).to_string()
    }
}

impl<T: Scalar> fmt::Display for WPStringyElement<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        match &self.value {
            WPValue::Untwisted(x) => fmt_t_poly(&x.poly, f)?,
            WPValue::Twisted { rational, .. } => write!(f, "{rational}")?,
        }
        write!(f, ", {}, g{})", self.cyclo_part(), self.sector)
    }
}

/// The product rule that applies to a pair of sectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ProductCase {
    /// `j = k = 0`: the ring product of the untwisted sector.
    Untwisted,
    /// Exactly one of `j`, `k` is zero.
    OneUntwisted,
    /// `j, k ≠ 0`, `j + k < p`.
    SumBelow,
    /// `j, k ≠ 0`, `j + k = p`.
    SumEqual,
    /// `j + k > p`.
    SumAbove,
}

impl ProductCase {
    pub fn classify(p: u32, j: u32, k: u32) -> ProductCase {
        match (j, k) {
            (0, 0) => ProductCase::Untwisted,
            (0, _) | (_, 0) => ProductCase::OneUntwisted,
            _ if j + k < p => ProductCase::SumBelow,
            _ if j + k == p => ProductCase::SumEqual,
            _ => ProductCase::SumAbove,
        }
    }

    /// The defining condition, written for the pair `(j, k)`.
    pub fn condition(&self, k: u32) -> &'static str {
        match self {
            ProductCase::Untwisted => "j=0, k=0",
            ProductCase::OneUntwisted if k == 0 => "k=0, j≠0",
            ProductCase::OneUntwisted => "j=0, k≠0",
            ProductCase::SumBelow => "j+k<p, j≠0, k≠0",
            ProductCase::SumEqual => "j+k=p, j≠0, k≠0",
            ProductCase::SumAbove => "j+k>p",
        }
    }
}

/// One row of the instantiated product rules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseRow {
    pub j: u32,
    pub k: u32,
    pub case: ProductCase,
    pub target: u32,
    pub formula: String,
}

/// Rational structure constants of the stringy ring on the basis
/// `1, t, …, tⁿ, g_1, …, g_{p−1}`, where `g_j` is the unit of sector `j`.
#[derive(Debug, Clone)]
pub struct KorbTable<T> {
    pub labels: Vec<String>,
    /// `products[a][b]` is the coordinate vector of `basis[a] ⋆ basis[b]`.
    pub products: Vec<Vec<Vec<T>>>,
    /// `(relation, holds)` for `(1−u)^{n+1}`, `g^p − (1−u)ⁿ` and `g^{p+1}`.
    pub relations: Vec<(String, bool)>,
}

impl<T: Scalar> KorbTable<T> {
    pub fn dimension(&self) -> usize {
        self.labels.len()
    }

    pub fn relations_hold(&self) -> bool {
        self.relations.iter().all(|(_, ok)| *ok)
    }
}

/// Comparison of the rational table with `ℚ[x,g]/⟨x^{n+1}, g^p − xⁿ, g^{p+1}⟩`
/// under `x ↦ t = 1 − u`, `g ↦ g_1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentationReport {
    /// The three generators map to zero.
    pub relations_hold: bool,
    /// For all pairs of standard monomials `m₁, m₂`, the image of the normal
    /// form of `m₁m₂` equals the product of the images.
    pub products_agree: bool,
    pub table_dim: usize,
    pub quotient_dim: usize,
    /// Rank of the images of the standard monomials.
    pub image_rank: usize,
    pub groebner_basis: Vec<String>,
    pub standard_monomials: Vec<String>,
}

impl PresentationReport {
    pub fn surjective(&self) -> bool {
        self.image_rank == self.table_dim
    }

    pub fn injective(&self) -> bool {
        self.image_rank == self.quotient_dim
    }

    /// The presentation map is a well defined isomorphism.
    pub fn passes(&self) -> bool {
        self.relations_hold && self.products_agree && self.surjective() && self.injective()
    }
}

#[derive(Debug, Clone)]
pub struct WeightedProjective {
    p: u32,
    n: u32,
    eigen: LocalEigenData,
}

impl WeightedProjective {
    pub fn new(p: u32, n: u32) -> Result<Self, WprojError> {
        if !is_prime(p) {
            return Err(WprojError::NotPrime(p));
        }
        if n == 0 {
            return Err(WprojError::ZeroDimension);
        }
        Ok(WeightedProjective {
            p,
            n,
            eigen: LocalEigenData::weighted_projective(p, n)?,
        })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn eigen_data(&self) -> &LocalEigenData {
        &self.eigen
    }

    fn shape(&self, reason: impl Into<String>) -> WprojError {
        WprojError::Shape {
            p: self.p,
            n: self.n,
            reason: reason.into(),
        }
    }

    fn field_element<T: Scalar>(&self, q: &CyclotomicNumber<T>) -> Result<CyclotomicNumber<T>, WprojError> {
        q.promote(self.p)
            .map_err(|_| self.shape(format!("{q} does not lie in ℚ(ζ_{})", self.p)))
    }

    /// `(Σ poly[i] tⁱ, cyclo)`; `poly` may be shorter than `n + 1`.
    pub fn ring_element<T: Scalar>(
        &self,
        poly: Vec<T>,
        cyclo: CyclotomicNumber<T>,
    ) -> Result<WPRingElement<T>, WprojError> {
        let len = self.n as usize + 1;
        if poly.len() > len {
            return Err(self.shape(format!("{} coefficients given, at most {len} allowed", poly.len())));
        }
        let mut poly = poly;
        poly.resize(len, T::zero());
        Ok(WPRingElement {
            poly,
            cyclo: self.field_element(&cyclo)?,
        })
    }

    /// Reads `f; q` where `f` is a polynomial in `u` or `t` (`t = 1 − u`,
    /// reduced modulo `t^{n+1}`) and `q` a polynomial in `z = ζ_p`.
    pub fn parse_ring_element<T: Scalar>(&self, text: &str) -> Result<WPRingElement<T>, WprojError> {
        let (f, q) = text
            .split_once(';')
            .ok_or_else(|| self.shape(format!("expected \"f(u); q(z)\", got {text:?}")))?;
        let poly = expr::parse(&TruncatedAlgebra::<T>::new(self.n as usize + 1), f)?;
        let cyclo = CyclotomicNumber::parse(q, self.p)?;
        self.ring_element(poly, cyclo)
    }

    pub fn untwisted<T: Scalar>(&self, x: WPRingElement<T>) -> Result<WPStringyElement<T>, WprojError> {
        self.validate_ring(&x)?;
        Ok(WPStringyElement {
            sector: 0,
            value: WPValue::Untwisted(x),
        })
    }

    /// `(r, q, g_j)` with `j ≠ 0`.
    pub fn twisted<T: Scalar>(
        &self,
        j: u32,
        rational: T,
        cyclo: CyclotomicNumber<T>,
    ) -> Result<WPStringyElement<T>, WprojError> {
        if j == 0 || j >= self.p {
            return Err(self.shape(format!("twisted sector index {j} outside 1..{}", self.p)));
        }
        Ok(WPStringyElement {
            sector: j,
            value: WPValue::Twisted {
                rational,
                cyclo: self.field_element(&cyclo)?,
            },
        })
    }

    /// Reads an element of sector `j` from `f; q` (`f` must be a constant
    /// when `j ≠ 0`).
    pub fn parse_element<T: Scalar>(&self, j: u32, text: &str) -> Result<WPStringyElement<T>, WprojError> {
        let x = self.parse_ring_element::<T>(text)?;
        if j == 0 {
            return self.untwisted(x);
        }
        if x.poly[1..].iter().any(|c| !c.is_zero()) {
            return Err(self.shape(format!("twisted sector values have a constant rational part, got {text:?}")));
        }
        self.twisted(j, x.poly[0].clone(), x.cyclo)
    }

    /// The unit `(1, 1, g_j)` of sector `j`.
    pub fn sector_unit<T: Scalar>(&self, j: u32) -> Result<WPStringyElement<T>, WprojError> {
        if j == 0 {
            self.untwisted(self.ring_element(vec![T::one()], CyclotomicNumber::one(self.p))?)
        } else {
            self.twisted(j, T::one(), CyclotomicNumber::one(self.p))
        }
    }

    /// The stringy unit `(1, 1, g_0)`.
    pub fn unit<T: Scalar>(&self) -> WPStringyElement<T> {
        self.sector_unit(0).expect("sector 0 exists")
    }

    /// A spanning set of the whole ring: `(tᵃ, 0, g_0)`, `(0, ζⁱ, g_j)` and
    /// `(1, 0, g_j)` for `j ≠ 0`.
    pub fn basis<T: Scalar>(&self) -> Vec<WPStringyElement<T>> {
        let p = self.p;
        let mut out = Vec::new();
        for a in 0..=self.n as usize {
            let mut poly = vec![T::zero(); a + 1];
            poly[a] = T::one();
            out.push(self.untwisted(self.ring_element(poly, CyclotomicNumber::zero(p)).expect("fits")).expect("fits"));
        }
        let field_dim = p as i64 - 1;
        for i in 0..field_dim {
            let z = CyclotomicNumber::zeta_pow(p, i);
            out.push(self.untwisted(self.ring_element(vec![], z).expect("fits")).expect("fits"));
        }
        for j in 1..p {
            out.push(self.twisted(j, T::one(), CyclotomicNumber::zero(p)).expect("fits"));
            for i in 0..field_dim {
                out.push(self.twisted(j, T::zero(), CyclotomicNumber::zeta_pow(p, i)).expect("fits"));
            }
        }
        out
    }

    fn validate_ring<T: Scalar>(&self, x: &WPRingElement<T>) -> Result<(), WprojError> {
        if x.poly.len() != self.n as usize + 1 {
            return Err(self.shape(format!("untwisted value has {} coefficients", x.poly.len())));
        }
        self.field_element(&x.cyclo)?;
        Ok(())
    }

    fn validate<T: Scalar>(&self, x: &WPStringyElement<T>) -> Result<(), WprojError> {
        if x.sector >= self.p {
            return Err(self.shape(format!("sector {} outside 0..{}", x.sector, self.p)));
        }
        match (&x.value, x.sector) {
            (WPValue::Untwisted(r), 0) => self.validate_ring(r),
            (WPValue::Twisted { cyclo, .. }, j) if j != 0 => self.field_element(cyclo).map(|_| ()),
            _ => Err(self.shape(format!("value kind does not match sector {}", x.sector))),
        }
    }

    /// Restriction to the fixed point: `(f(t), q) ↦ (f(0), q)`, i.e. `u = 1`.
    pub fn pullback<T: Scalar>(&self, x: &WPRingElement<T>) -> (T, CyclotomicNumber<T>) {
        (x.poly[0].clone(), x.cyclo.clone())
    }

    /// `(r, q) ↦ (r tⁿ, q (1−ζ)ⁿ)`.
    pub fn pushforward<T: Scalar>(&self, r: &T, q: &CyclotomicNumber<T>) -> WPRingElement<T> {
        let mut poly = vec![T::zero(); self.n as usize + 1];
        poly[self.n as usize] = r.clone();
        WPRingElement {
            poly,
            cyclo: q * &self.one_minus_zeta().pow(self.n),
        }
    }

    fn one_minus_zeta<T: Scalar>(&self) -> CyclotomicNumber<T> {
        &CyclotomicNumber::one(self.p) - &CyclotomicNumber::zeta(self.p)
    }

    fn element(&self, j: u32) -> GroupElement {
        self.eigen.group().element(&[j as i64]).expect("j < p")
    }

    /// The stringy product. The factors are restricted to the common fixed
    /// locus, multiplied, twisted by the Euler class of the obstruction
    /// bundle and pushed forward to the fixed locus of `g_{j+k}`.
    pub fn star<T: Scalar>(
        &self,
        x: &WPStringyElement<T>,
        y: &WPStringyElement<T>,
    ) -> Result<WPStringyElement<T>, WprojError> {
        self.validate(x)?;
        self.validate(y)?;
        let (j, k) = (x.sector, y.sector);
        let target = (j + k) % self.p;
        if let (WPValue::Untwisted(a), WPValue::Untwisted(b)) = (&x.value, &y.value) {
            return self.untwisted(a.mul(b));
        }
        let at_point = |v: &WPValue<T>| match v {
            WPValue::Untwisted(a) => self.pullback(a),
            WPValue::Twisted { rational, cyclo } => (rational.clone(), cyclo.clone()),
        };
        let (r, q) = at_point(&x.value);
        let (s, w) = at_point(&y.value);
        let (mut rs, mut qw) = (r * s, &q * &w);
        let obstruction = self.eigen.obstruction_ab(&self.element(j), &self.element(k))?;
        if !obstruction.is_empty() {
            // Euler class of the obstruction bundle: (1 − W)^rank
            let rank = obstruction.rank(&self.eigen);
            rs = T::zero();
            qw = &qw * &self.one_minus_zeta().pow(rank);
        }
        if target == 0 {
            self.untwisted(self.pushforward(&rs, &qw))
        } else {
            self.twisted(target, rs, qw)
        }
    }

    /// The product rules instantiated for every ordered pair of sectors.
    pub fn cases_table(&self) -> Vec<CaseRow> {
        let n = self.n;
        let euler = |var: &str| if n == 1 { format!("(1-{var})") } else { format!("(1-{var})^{n}") };
        let mut rows = Vec::new();
        for j in 0..self.p {
            for k in 0..self.p {
                let case = ProductCase::classify(self.p, j, k);
                let target = (j + k) % self.p;
                let formula = match case {
                    ProductCase::Untwisted => "(p(u)r(u), q(z)w(z), g0)".to_string(),
                    ProductCase::OneUntwisted if j == 0 => format!("(p(1)s, q(z)w(z), g{k})"),
                    ProductCase::OneUntwisted => format!("(r s(1), q(z)w(z), g{j})"),
                    ProductCase::SumBelow => format!("(rs, q(z)w(z), g{target})"),
                    ProductCase::SumEqual => format!("(rs{}, q(z)w(z){}, g0)", euler("u"), euler("z")),
                    ProductCase::SumAbove => format!("(0, q(z)w(z){}, g{target})", euler("z")),
                };
                rows.push(CaseRow {
                    j,
                    k,
                    case,
                    target,
                    formula,
                });
            }
        }
        rows
    }

    fn korb_basis<T: Scalar>(&self) -> Vec<WPStringyElement<T>> {
        let p = self.p;
        let mut out = Vec::new();
        for a in 0..=self.n as usize {
            let mut poly = vec![T::zero(); a + 1];
            poly[a] = T::one();
            out.push(self.untwisted(self.ring_element(poly, CyclotomicNumber::zero(p)).expect("fits")).expect("fits"));
        }
        for j in 1..p {
            out.push(self.twisted(j, T::one(), CyclotomicNumber::zero(p)).expect("fits"));
        }
        out
    }

    /// Rational coordinates on the basis `1, t, …, tⁿ, g_1, …, g_{p−1}`.
    pub fn korb_coordinates<T: Scalar>(&self, x: &WPStringyElement<T>) -> Vec<T> {
        let n = self.n as usize;
        let mut v = vec![T::zero(); n + self.p as usize];
        match &x.value {
            WPValue::Untwisted(a) => v[..=n].clone_from_slice(&a.poly),
            WPValue::Twisted { rational, .. } => v[n + x.sector as usize] = rational.clone(),
        }
        v
    }

    fn korb_power<T: Scalar>(&self, x: &WPStringyElement<T>, e: u32) -> Result<WPStringyElement<T>, WprojError> {
        let mut acc = self.unit::<T>();
        for _ in 0..e {
            acc = self.star(&acc, x)?;
        }
        Ok(acc)
    }

    /// Structure constants of the rational coordinates, together with the
    /// three defining relations checked in the table.
    pub fn korb_structure_constants<T: Scalar>(&self) -> Result<KorbTable<T>, WprojError> {
        let basis = self.korb_basis::<T>();
        let mut labels: Vec<String> = (0..=self.n)
            .map(|a| match a {
                0 => "1".to_string(),
                1 => "(1-u)".to_string(),
                _ => format!("(1-u)^{a}"),
            })
            .collect();
        labels.extend((1..self.p).map(|j| format!("g{j}")));
        let mut products = Vec::with_capacity(basis.len());
        for a in &basis {
            let row = basis
                .iter()
                .map(|b| self.star(a, b).map(|c| self.korb_coordinates(&c)))
                .collect::<Result<Vec<_>, _>>()?;
            products.push(row);
        }
        let (n, p) = (self.n, self.p);
        let power = |e: u32| if e == 1 { "(1-u)".to_string() } else { format!("(1-u)^{e}") };
        let t = &basis[1];
        let g = &basis[n as usize + 1];
        let zero = vec![T::zero(); basis.len()];
        let t_n = self.korb_coordinates(&basis[n as usize]);
        let relations = vec![
            (
                power(n + 1),
                self.korb_coordinates(&self.korb_power(t, n + 1)?) == zero,
            ),
            (
                format!("g^{p} - {}", power(n)),
                self.korb_coordinates(&self.korb_power(g, p)?) == t_n,
            ),
            (
                format!("g^{}", p + 1),
                self.korb_coordinates(&self.korb_power(g, p + 1)?) == zero,
            ),
        ];
        Ok(KorbTable {
            labels,
            products,
            relations,
        })
    }

    /// The generators `x^{n+1}`, `g^p − xⁿ`, `g^{p+1}` of the presentation
    /// ideal in `ℚ[x, g]`.
    pub fn presentation_ideal<T: Scalar>(&self) -> Vec<Polynomial<T>> {
        let (n, p) = (self.n, self.p);
        vec![
            Polynomial::from_terms(2, &[(&[n + 1, 0], 1)]),
            Polynomial::from_terms(2, &[(&[0, p], 1), (&[n, 0], -1)]),
            Polynomial::from_terms(2, &[(&[0, p + 1], 1)]),
        ]
    }

    fn image<T: Scalar>(&self, f: &Polynomial<T>) -> Result<Vec<T>, WprojError> {
        let basis = self.korb_basis::<T>();
        let t = &basis[1];
        let g = &basis[self.n as usize + 1];
        let mut acc = vec![T::zero(); basis.len()];
        for (Monomial(e), c) in f.terms() {
            let m = self.star(&self.korb_power(t, e[0])?, &self.korb_power(g, e[1])?)?;
            for (a, b) in acc.iter_mut().zip(self.korb_coordinates(&m)) {
                *a = a.clone() + c.clone() * b;
            }
        }
        Ok(acc)
    }

    /// Compares the rational table with the quotient ring
    /// `ℚ[x,g]/⟨x^{n+1}, g^p − xⁿ, g^{p+1}⟩` through a reduced Gröbner basis.
    pub fn chen_ruan_presentation_check<T: Scalar>(&self) -> Result<PresentationReport, WprojError> {
        let gens = self.presentation_ideal::<T>();
        let gb = groebner::groebner_basis(&gens);
        let std = groebner::standard_monomials(&gb, 2).expect("the ideal is zero dimensional");
        let table_dim = (self.n + self.p) as usize;
        let zero = vec![T::zero(); table_dim];
        let mut relations_hold = true;
        for f in &gens {
            relations_hold &= self.image(f)? == zero;
        }
        let std_polys: Vec<Polynomial<T>> = std.iter().map(|m| Polynomial::monomial(&m.0, T::one())).collect();
        let images = std_polys.iter().map(|m| self.image(m)).collect::<Result<Vec<_>, _>>()?;
        let mut products_agree = true;
        for (a, ma) in std.iter().enumerate() {
            for (b, mb) in std.iter().enumerate() {
                let e: Vec<u32> = ma.0.iter().zip(&mb.0).map(|(x, y)| x + y).collect();
                let nf = Polynomial::monomial(&e, T::one()).normal_form(&gb);
                let lhs = self.image(&nf)?;
                let x = self.korb_from_coordinates(&images[a]);
                let y = self.korb_from_coordinates(&images[b]);
                let rhs = self.star_coordinates(&x, &y)?;
                products_agree &= lhs == rhs;
            }
        }
        let mono_name = |m: &Monomial| {
            let part = |v: &str, e: u32| match e {
                0 => None,
                1 => Some(v.to_string()),
                _ => Some(format!("{v}^{e}")),
            };
            let s: Vec<String> = [part("x", m.0[0]), part("g", m.0[1])].into_iter().flatten().collect();
            if s.is_empty() {
                "1".to_string()
            } else {
                s.join("*")
            }
        };
        Ok(PresentationReport {
            relations_hold,
            products_agree,
            table_dim,
            quotient_dim: std.len(),
            image_rank: groebner::rank(&images),
            groebner_basis: gb
                .iter()
                .map(|f| {
                    f.terms()
                        .rev()
                        .map(|(m, c)| {
                            if c.is_one() {
                                mono_name(m)
                            } else {
                                format!("{c}*{}", mono_name(m))
                            }
                        })
                        .collect::<Vec<_>>()
                        .join(" + ")
                        .replace("+ -1*", "- ")
                })
                .collect(),
            standard_monomials: std.iter().map(mono_name).collect(),
        })
    }

    fn korb_from_coordinates<T: Scalar>(&self, v: &[T]) -> Vec<WPStringyElement<T>> {
        let n = self.n as usize;
        let p = self.p;
        let mut out = vec![self
            .untwisted(self.ring_element(v[..=n].to_vec(), CyclotomicNumber::zero(p)).expect("fits"))
            .expect("fits")];
        for j in 1..p {
            out.push(self.twisted(j, v[n + j as usize].clone(), CyclotomicNumber::zero(p)).expect("fits"));
        }
        out
    }

    fn star_coordinates<T: Scalar>(
        &self,
        x: &[WPStringyElement<T>],
        y: &[WPStringyElement<T>],
    ) -> Result<Vec<T>, WprojError> {
        let mut acc = vec![T::zero(); (self.n + self.p) as usize];
        for a in x {
            for b in y {
                let c = self.korb_coordinates(&self.star(a, b)?);
                for (s, v) in acc.iter_mut().zip(c) {
                    *s = s.clone() + v;
                }
            }
        }
        Ok(acc)
    }
}

/// Polynomials in `t` truncated at degree `len − 1`, with `u = 1 − t`.
struct TruncatedAlgebra<T> {
    len: usize,
    _scalar: std::marker::PhantomData<T>,
}

impl<T: Scalar> TruncatedAlgebra<T> {
    fn new(len: usize) -> Self {
        TruncatedAlgebra {
            len,
            _scalar: std::marker::PhantomData,
        }
    }

    fn constant(&self, c: T) -> Vec<T> {
        let mut v = vec![T::zero(); self.len];
        v[0] = c;
        v
    }
}

impl<T: Scalar> Algebra for TruncatedAlgebra<T> {
    type Value = Vec<T>;

    fn integer(&self, v: i64) -> Result<Vec<T>, String> {
        Ok(self.constant(T::from_int(v)))
    }

    fn variable(&self, name: &str) -> Result<Vec<T>, String> {
        let mut v = vec![T::zero(); self.len];
        match name {
            "t" => {
                if self.len > 1 {
                    v[1] = T::one();
                }
            }
            "u" => {
                v[0] = T::one();
                if self.len > 1 {
                    v[1] = -T::one();
                }
            }
            _ => return Err(format!("unknown symbol {name:?} (use u or t)")),
        }
        Ok(v)
    }

    fn add(&self, a: Vec<T>, b: Vec<T>) -> Result<Vec<T>, String> {
        Ok(a.into_iter().zip(b).map(|(x, y)| x + y).collect())
    }

    fn neg(&self, a: Vec<T>) -> Result<Vec<T>, String> {
        Ok(a.into_iter().map(|x| -x).collect())
    }

    fn mul(&self, a: Vec<T>, b: Vec<T>) -> Result<Vec<T>, String> {
        let mut c = vec![T::zero(); self.len];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate().take(self.len - i) {
                c[i + j] = c[i + j].clone() + x.clone() * y.clone();
            }
        }
        Ok(c)
    }

    fn pow(&self, a: Vec<T>, e: u32) -> Result<Vec<T>, String> {
        let mut acc = self.constant(T::one());
        for _ in 0..e {
            acc = self.mul(acc, a.clone())?;
        }
        Ok(acc)
    }

    fn div(&self, a: Vec<T>, b: Vec<T>) -> Result<Vec<T>, String> {
        if b[1..].iter().any(|c| !c.is_zero()) || b[0].is_zero() {
            return Err("division is only by nonzero constants".to_string());
        }
        let d = b[0].clone();
        Ok(a.into_iter().map(|x| x / d.clone()).collect())
    }
}
