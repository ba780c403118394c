//! Multiplicative models of `K*` for the library factors and their tensor
//! products.
//!
//! * `T²`: `K⁰ = ⟨1, t⟩`, `K¹ = ⟨θ₁, θ₂⟩` with `θᵢ² = 0` and
//!   `θ₁θ₂ = t = −θ₂θ₁`; `t` stands for `1 − H`, so `t² = 0`.
//! * `4*`: four orthogonal idempotents `e₁, …, e₄` summing to `1`.
//! * a point: `ℚ`.
//!
//! Tensor products carry the Koszul sign, so the product of graded
//! commutative factors stays graded commutative.

use std::collections::BTreeMap;
use std::fmt;

use crate::cyclotomic::CyclotomicNumber;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FactorKind {
    TwoTorus,
    FourPoints,
    Point,
}

impl FactorKind {
    pub fn basis(self) -> Vec<FactorBasis> {
        use FactorBasis::*;
        match self {
            FactorKind::TwoTorus => vec![One, Theta(1), Theta(2), Top],
            FactorKind::FourPoints => (1..=4).map(Pt).collect(),
            FactorKind::Point => vec![One],
        }
    }

    /// The unit, as a sum of basis elements with coefficient 1.
    pub fn unit(self) -> Vec<FactorBasis> {
        match self {
            FactorKind::FourPoints => self.basis(),
            _ => vec![FactorBasis::One],
        }
    }

    /// Short name used in fixed-set descriptors.
    pub fn symbol(self) -> &'static str {
        match self {
            FactorKind::TwoTorus => "T²",
            FactorKind::FourPoints => "4*",
            FactorKind::Point => "pt",
        }
    }

    /// Product of two basis elements as `(sign, element)`; `None` is zero.
    pub fn mul(self, a: FactorBasis, b: FactorBasis) -> Option<(i64, FactorBasis)> {
        use FactorBasis::*;
        match (self, a, b) {
            (FactorKind::FourPoints, Pt(i), Pt(j)) => (i == j).then_some((1, Pt(i))),
            (FactorKind::Point, One, One) => Some((1, One)),
            (FactorKind::TwoTorus, One, x) | (FactorKind::TwoTorus, x, One) => Some((1, x)),
            (FactorKind::TwoTorus, Theta(1), Theta(2)) => Some((1, Top)),
            (FactorKind::TwoTorus, Theta(2), Theta(1)) => Some((-1, Top)),
            (FactorKind::TwoTorus, _, _) => None,
            _ => panic!("{a} and {b} are not both basis elements of {}", self.symbol()),
        }
    }
}

/// A basis element of one factor's K-theory.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FactorBasis {
    One,
    Theta(u8),
    Top,
    Pt(u8),
}

impl FactorBasis {
    /// `ℤ/2` grading.
    pub fn degree(self) -> u8 {
        match self {
            FactorBasis::Theta(_) => 1,
            _ => 0,
        }
    }

    pub fn belongs_to(self, kind: FactorKind) -> bool {
        kind.basis().contains(&self)
    }

    /// Restriction along `4* → T²`: `1 ↦ e₁ + e₂ + e₃ + e₄`, everything
    /// else to zero.
    pub fn restrict_to_points(self) -> Vec<FactorBasis> {
        match self {
            FactorBasis::One => FactorKind::FourPoints.basis(),
            _ => Vec::new(),
        }
    }

    /// Pushforward along `4* → T²`: each point class goes to `t`.
    pub fn push_to_torus(self) -> Option<FactorBasis> {
        match self {
            FactorBasis::Pt(_) => Some(FactorBasis::Top),
            _ => None,
        }
    }

    fn parse(s: &str) -> Option<Self> {
        match s {
            "1" => Some(FactorBasis::One),
            "t" => Some(FactorBasis::Top),
            "θ1" | "theta1" => Some(FactorBasis::Theta(1)),
            "θ2" | "theta2" => Some(FactorBasis::Theta(2)),
            _ => {
                let i: u8 = s.strip_prefix('e')?.parse().ok()?;
                (1..=4).contains(&i).then_some(FactorBasis::Pt(i))
            }
        }
    }
}

impl fmt::Display for FactorBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactorBasis::One => write!(f, "1"),
            FactorBasis::Theta(i) => write!(f, "θ{i}"),
            FactorBasis::Top => write!(f, "t"),
            FactorBasis::Pt(i) => write!(f, "e{i}"),
        }
    }
}

/// A pure tensor of factor basis elements, e.g. `e2⊗1⊗θ1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisWord(Vec<FactorBasis>);

impl BasisWord {
    pub fn new(factors: Vec<FactorBasis>) -> Self {
        BasisWord(factors)
    }

    pub fn factors(&self) -> &[FactorBasis] {
        &self.0
    }

    pub fn degree(&self) -> u8 {
        self.0.iter().map(|b| b.degree()).sum::<u8>() % 2
    }

    pub fn fits(&self, kinds: &[FactorKind]) -> bool {
        self.0.len() == kinds.len() && self.0.iter().zip(kinds).all(|(b, &k)| b.belongs_to(k))
    }

    /// Parses `e2⊗1⊗θ1` (`*` is accepted in place of `⊗`). With no
    /// factors the only word is `1`.
    pub fn parse(text: &str, factors: usize) -> Option<Self> {
        let text = text.trim();
        if factors == 0 {
            return (text == "1").then(|| BasisWord(Vec::new()));
        }
        let parts: Vec<&str> = text.split(['⊗', '*']).map(str::trim).collect();
        if parts.len() != factors {
            return None;
        }
        parts.into_iter().map(FactorBasis::parse).collect::<Option<Vec<_>>>().map(BasisWord)
    }

    /// Graded tensor product `(a₁⊗…⊗aₙ)(b₁⊗…⊗bₙ)`.
    pub fn mul(&self, other: &BasisWord, kinds: &[FactorKind]) -> Option<(i64, BasisWord)> {
        let mut sign = 1;
        let mut out = Vec::with_capacity(kinds.len());
        for (i, &kind) in kinds.iter().enumerate() {
            // moving bᵢ left past a_{i+1}, …, a_n
            let passed: u8 = self.0[i + 1..].iter().map(|a| a.degree()).sum();
            if other.0[i].degree() * passed % 2 == 1 {
                sign = -sign;
            }
            let (s, c) = kind.mul(self.0[i], other.0[i])?;
            sign *= s;
            out.push(c);
        }
        Some((sign, BasisWord(out)))
    }
}

impl fmt::Display for BasisWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|b| b.to_string()).collect();
        write!(f, "{}", parts.join("⊗"))
    }
}

/// A linear combination of basis words with cyclotomic coefficients.
#[derive(Debug, Clone)]
pub struct KClass<T> {
    terms: BTreeMap<BasisWord, CyclotomicNumber<T>>,
}

impl<T: Scalar> PartialEq for KClass<T> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<T: Scalar> Default for KClass<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Scalar> KClass<T> {
    pub fn zero() -> Self {
        KClass {
            terms: BTreeMap::new(),
        }
    }

    pub fn word(word: BasisWord) -> Self {
        let mut k = Self::zero();
        k.add_term(word, CyclotomicNumber::one(1));
        k
    }

    /// The unit of `K*` of a product of the given factors.
    pub fn unit(kinds: &[FactorKind]) -> Self {
        let mut words = vec![Vec::new()];
        for kind in kinds {
            words = words
                .into_iter()
                .flat_map(|w| {
                    kind.unit().into_iter().map(move |b| {
                        let mut w = w.clone();
                        w.push(b);
                        w
                    })
                })
                .collect();
        }
        let mut k = Self::zero();
        for w in words {
            k.add_term(BasisWord(w), CyclotomicNumber::one(1));
        }
        k
    }

    pub fn add_term(&mut self, word: BasisWord, coeff: CyclotomicNumber<T>) {
        let merged = match self.terms.remove(&word) {
            Some(c) => &c + &coeff,
            None => coeff,
        };
        if !merged.is_zero() {
            self.terms.insert(word, merged);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisWord, &CyclotomicNumber<T>)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        for (w, c) in other.terms() {
            r.add_term(w.clone(), c.clone());
        }
        r
    }

    pub fn scale(&self, c: &CyclotomicNumber<T>) -> Self {
        let mut r = Self::zero();
        for (w, d) in self.terms() {
            r.add_term(w.clone(), d * c);
        }
        r
    }

    pub fn mul(&self, other: &Self, kinds: &[FactorKind]) -> Self {
        let mut r = Self::zero();
        for (a, x) in self.terms() {
            for (b, y) in other.terms() {
                if let Some((sign, w)) = a.mul(b, kinds) {
                    r.add_term(w, (x * y).scale(&T::from_int(sign)));
                }
            }
        }
        r
    }

    /// Applies a map defined factor by factor: `f(i, b)` is the image of
    /// `b` in factor `i`, as a list of `(coefficient, basis element)`.
    pub fn map_factors<F>(&self, f: F) -> Self
    where
        F: Fn(usize, FactorBasis) -> Vec<(CyclotomicNumber<T>, FactorBasis)>,
    {
        let mut r = Self::zero();
        for (word, c) in self.terms() {
            let mut partial: Vec<(CyclotomicNumber<T>, Vec<FactorBasis>)> = vec![(c.clone(), Vec::new())];
            for (i, &b) in word.factors().iter().enumerate() {
                let images = f(i, b);
                partial = partial
                    .iter()
                    .flat_map(|(coef, prefix)| {
                        images.iter().map(move |(d, img)| {
                            let mut p = prefix.clone();
                            p.push(*img);
                            (coef * d, p)
                        })
                    })
                    .collect();
            }
            for (coef, w) in partial {
                r.add_term(BasisWord(w), coef);
            }
        }
        r
    }
}

impl<T: Scalar> fmt::Display for KClass<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms().map(|(w, c)| format!("({c})·{w}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64;
    use FactorBasis::*;

    type K = KClass<Rational64>;
    const T2: FactorKind = FactorKind::TwoTorus;
    const P4: FactorKind = FactorKind::FourPoints;

    #[test]
    fn torus_relations() {
        assert_eq!(T2.mul(Theta(1), Theta(2)), Some((1, Top)));
        assert_eq!(T2.mul(Theta(2), Theta(1)), Some((-1, Top)));
        assert_eq!(T2.mul(Theta(1), Theta(1)), None);
        assert_eq!(T2.mul(Top, Top), None);
        assert_eq!(T2.mul(Top, Theta(2)), None);
        assert_eq!(T2.mul(One, Top), Some((1, Top)));
    }

    #[test]
    fn factor_associativity() {
        for kind in [T2, P4, FactorKind::Point] {
            let b = kind.basis();
            for &x in &b {
                for &y in &b {
                    for &z in &b {
                        let left = kind.mul(x, y).and_then(|(s, xy)| kind.mul(xy, z).map(|(t, r)| (s * t, r)));
                        let right = kind.mul(y, z).and_then(|(s, yz)| kind.mul(x, yz).map(|(t, r)| (s * t, r)));
                        assert_eq!(left, right, "{kind:?} {x} {y} {z}");
                    }
                }
            }
        }
    }

    #[test]
    fn points_unit() {
        let kinds = [P4];
        let u = K::unit(&kinds);
        let e2 = K::word(BasisWord::new(vec![Pt(2)]));
        assert_eq!(u.mul(&e2, &kinds), e2);
        assert_eq!(e2.mul(&K::word(BasisWord::new(vec![Pt(3)])), &kinds), K::zero());
    }

    #[test]
    fn koszul_sign() {
        let kinds = [T2, T2];
        let a = BasisWord::new(vec![One, Theta(1)]);
        let b = BasisWord::new(vec![Theta(1), One]);
        // (1⊗θ)(θ⊗1) = −θ⊗θ, (θ⊗1)(1⊗θ) = θ⊗θ
        assert_eq!(a.mul(&b, &kinds), Some((-1, BasisWord::new(vec![Theta(1), Theta(1)]))));
        assert_eq!(b.mul(&a, &kinds), Some((1, BasisWord::new(vec![Theta(1), Theta(1)]))));
    }

    #[test]
    fn word_parse_display() {
        let w = BasisWord::parse("e2⊗1⊗θ1", 3).unwrap();
        assert_eq!(w.to_string(), "e2⊗1⊗θ1");
        assert_eq!(BasisWord::parse("e2 * 1 * theta1", 3), Some(w.clone()));
        assert!(w.fits(&[P4, T2, T2]));
        assert!(!w.fits(&[T2, T2, T2]));
        assert_eq!(w.degree(), 1);
        assert_eq!(BasisWord::parse("1", 0), Some(BasisWord::new(vec![])));
        assert!(BasisWord::parse("e5⊗1⊗1", 3).is_none());
        assert!(BasisWord::parse("e1⊗1", 3).is_none());
    }

    #[test]
    fn restriction_and_pushforward() {
        let k = K::word(BasisWord::new(vec![One]));
        let r = k.map_factors(|_, b| {
            b.restrict_to_points()
                .into_iter()
                .map(|p| (CyclotomicNumber::one(1), p))
                .collect()
        });
        assert_eq!(r, K::unit(&[P4]));
        let pushed = r.map_factors(|_, b| {
            b.push_to_torus()
                .into_iter()
                .map(|p| (CyclotomicNumber::one(1), p))
                .collect()
        });
        let mut four_t = K::zero();
        four_t.add_term(BasisWord::new(vec![Top]), CyclotomicNumber::from_int(1, 4));
        assert_eq!(pushed, four_t);
    }
}
