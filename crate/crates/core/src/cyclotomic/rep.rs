use std::collections::BTreeMap;

use super::{CycloError, CyclotomicNumber};
use crate::group::{Character, GroupElement};
use crate::scalar::Scalar;

/// A virtual representation of the cyclic group `ℤ/m`, written as an
/// integer combination of the one-dimensional characters `W^e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicRepresentation {
    m: u32,
    multiplicities: BTreeMap<u32, i64>,
}

impl CyclicRepresentation {
    pub fn zero(m: u32) -> Self {
        assert!(m > 0);
        CyclicRepresentation {
            m,
            multiplicities: BTreeMap::new(),
        }
    }

    pub fn trivial(m: u32) -> Self {
        Self::character_power(m, 0)
    }

    /// `W^e`, where `W` sends the generator to `ζ_m`.
    pub fn character_power(m: u32, e: i64) -> Self {
        let mut r = Self::zero(m);
        r.multiplicities.insert(e.rem_euclid(m as i64) as u32, 1);
        r
    }

    /// Builds `Σ mult · W^e` from `(exponent, multiplicity)` pairs.
    pub fn from_multiset(m: u32, terms: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let mut r = Self::zero(m);
        for (e, c) in terms {
            r.add_term(e.rem_euclid(m as i64) as u32, c);
        }
        r
    }

    fn add_term(&mut self, e: u32, c: i64) {
        let slot = self.multiplicities.entry(e).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.multiplicities.remove(&e);
        }
    }

    pub fn order(&self) -> u32 {
        self.m
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, i64)> + '_ {
        self.multiplicities.iter().map(|(&e, &c)| (e, c))
    }

    /// Virtual dimension.
    pub fn dimension(&self) -> i64 {
        self.multiplicities.values().sum()
    }

    pub fn add(&self, other: &Self) -> Result<Self, CycloError> {
        self.same_order(other)?;
        let mut r = self.clone();
        for (e, c) in other.terms() {
            r.add_term(e, c);
        }
        Ok(r)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, CycloError> {
        self.same_order(other)?;
        let mut r = self.clone();
        for (e, c) in other.terms() {
            r.add_term(e, -c);
        }
        Ok(r)
    }

    pub fn tensor(&self, other: &Self) -> Result<Self, CycloError> {
        self.same_order(other)?;
        let mut r = Self::zero(self.m);
        for (a, x) in self.terms() {
            for (b, y) in other.terms() {
                r.add_term((a + b) % self.m, x * y);
            }
        }
        Ok(r)
    }

    pub fn tensor_pow(&self, n: u32) -> Self {
        let mut acc = Self::trivial(self.m);
        for _ in 0..n {
            acc = acc.tensor(self).expect("same order");
        }
        acc
    }

    fn same_order(&self, other: &Self) -> Result<(), CycloError> {
        if self.m == other.m {
            Ok(())
        } else {
            Err(CycloError::OrderMismatch {
                expected: self.m,
                found: other.m,
            })
        }
    }
}

/// Character value of `rep` at the generator `g` of `⟨g⟩`, in `ℚ(ζ_m)`.
pub fn trace_at<T: Scalar>(g: &GroupElement, rep: &CyclicRepresentation) -> Result<CyclotomicNumber<T>, CycloError> {
    let m = g.order();
    if m != rep.order() {
        return Err(CycloError::OrderMismatch {
            expected: m,
            found: rep.order(),
        });
    }
    let mut acc = CyclotomicNumber::zero(m);
    for (e, c) in rep.terms() {
        acc = &acc + &CyclotomicNumber::zeta_pow(m, e as i64).scale(&T::from_int(c));
    }
    Ok(acc)
}

/// Rank of the invariants of `⊕ V_χ ⊗ L` where `G` acts on `V_χ` through
/// `χ` and on the coefficient line `L` through `twist`: the summands with
/// `χ · twist` trivial.
pub fn twisted_invariants_rank(twist: &Character, summands: &[(Character, u64)]) -> Result<u64, CycloError> {
    let mut rank = 0;
    for (chi, r) in summands {
        if chi.mul(twist)?.is_trivial() {
            rank += r;
        }
    }
    Ok(rank)
}
