//! Multivariate polynomials over a [`Scalar`] field with Buchberger's
//! algorithm, enough to compute normal forms and standard monomials of
//! small zero-dimensional ideals.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::Scalar;

/// Exponent vector, ordered graded-lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial<T> {
    nvars: usize,
    terms: BTreeMap<Monomial, T>,
}

impl<T: Scalar> Polynomial<T> {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(exponents: &[u32], c: T) -> Self {
        let mut p = Self::zero(exponents.len());
        p.add_term(Monomial(exponents.to_vec()), c);
        p
    }

    /// Sum of `c · x^e` over the given pairs.
    pub fn from_terms(nvars: usize, terms: &[(&[u32], i64)]) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars);
            p.add_term(Monomial(e.to_vec()), T::from_int(*c));
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: T) {
        let v = match self.terms.remove(&m) {
            Some(d) => d + c,
            None => c,
        };
        if !v.is_zero() {
            self.terms.insert(m, v);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &T)> {
        self.terms.iter()
    }

    pub fn leading(&self) -> Option<(&Monomial, &T)> {
        self.terms.iter().next_back()
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(m.clone(), -c.clone());
        }
        r
    }

    fn mul_term(&self, m: &Monomial, c: &T) -> Self {
        let mut r = Self::zero(self.nvars);
        for (n, d) in &self.terms {
            r.add_term(n.mul(m), d.clone() * c.clone());
        }
        r
    }

    fn monic(&self) -> Self {
        match self.leading() {
            Some((_, lc)) => {
                let inv = T::one() / lc.clone();
                self.mul_term(&Monomial(vec![0; self.nvars]), &inv)
            }
            None => self.clone(),
        }
    }

    /// Full reduction of `self` modulo `basis`.
    pub fn normal_form(&self, basis: &[Polynomial<T>]) -> Self {
        let mut p = self.clone();
        let mut rem = Self::zero(self.nvars);
        while let Some((m, c)) = p.leading().map(|(m, c)| (m.clone(), c.clone())) {
            let divisor = basis.iter().find(|b| b.leading().is_some_and(|(lm, _)| lm.divides(&m)));
            match divisor {
                Some(b) => {
                    let (lm, lc) = b.leading().expect("nonzero");
                    p = p.sub(&b.mul_term(&m.div(lm), &(c / lc.clone())));
                }
                None => {
                    p.terms.remove(&m);
                    rem.add_term(m, c);
                }
            }
        }
        rem
    }
}

impl<T: Scalar> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| {
                let vars: Vec<String> = m
                    .0
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| if e == 1 { format!("v{i}") } else { format!("v{i}^{e}") })
                    .collect();
                if vars.is_empty() {
                    c.to_string()
                } else {
                    format!("{c}*{}", vars.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn s_polynomial<T: Scalar>(f: &Polynomial<T>, g: &Polynomial<T>) -> Polynomial<T> {
    let (fm, fc) = f.leading().expect("nonzero");
    let (gm, gc) = g.leading().expect("nonzero");
    let l = fm.lcm(gm);
    let a = f.mul_term(&l.div(fm), &(T::one() / fc.clone()));
    let b = g.mul_term(&l.div(gm), &(T::one() / gc.clone()));
    a.sub(&b)
}

/// The reduced Gröbner basis of the ideal generated by `gens`.
pub fn groebner_basis<T: Scalar>(gens: &[Polynomial<T>]) -> Vec<Polynomial<T>> {
    let mut basis: Vec<Polynomial<T>> = gens.iter().filter(|p| !p.is_zero()).map(Polynomial::monic).collect();
    let mut pairs: Vec<(usize, usize)> = (0..basis.len()).flat_map(|i| (0..i).map(move |j| (j, i))).collect();
    while let Some((i, j)) = pairs.pop() {
        let r = s_polynomial(&basis[i], &basis[j]).normal_form(&basis);
        if !r.is_zero() {
            basis.push(r.monic());
            let n = basis.len() - 1;
            pairs.extend((0..n).map(|k| (k, n)));
        }
    }
    // minimalize, then interreduce
    let mut minimal: Vec<Polynomial<T>> = Vec::new();
    for (i, p) in basis.iter().enumerate() {
        let lm = p.leading().expect("nonzero").0;
        let redundant = basis.iter().enumerate().any(|(j, q)| {
            let lq = q.leading().expect("nonzero").0;
            j != i && lq.divides(lm) && (lq != lm || j < i)
        });
        if !redundant {
            minimal.push(p.clone());
        }
    }
    let reduced: Vec<Polynomial<T>> = (0..minimal.len())
        .map(|i| {
            let others: Vec<Polynomial<T>> =
                minimal.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, q)| q.clone()).collect();
            let (lm, lc) = minimal[i].leading().expect("nonzero");
            let mut head = Polynomial::zero(minimal[i].nvars);
            head.add_term(lm.clone(), lc.clone());
            let tail = minimal[i].sub(&head).normal_form(&others);
            let mut p = tail;
            p.add_term(lm.clone(), lc.clone());
            p.monic()
        })
        .collect();
    let mut reduced = reduced;
    reduced.sort_by(|a, b| a.leading().expect("nonzero").0.cmp(b.leading().expect("nonzero").0));
    reduced
}

/// Monomials not divisible by any leading monomial of `basis`, or `None`
/// when the quotient is infinite dimensional.
pub fn standard_monomials<T: Scalar>(basis: &[Polynomial<T>], nvars: usize) -> Option<Vec<Monomial>> {
    let leads: Vec<&Monomial> = basis.iter().filter_map(|b| b.leading().map(|(m, _)| m)).collect();
    let mut bounds = Vec::with_capacity(nvars);
    for i in 0..nvars {
        let pure = leads
            .iter()
            .filter(|m| m.0.iter().enumerate().all(|(j, &e)| j == i || e == 0))
            .map(|m| m.0[i])
            .min()?;
        bounds.push(pure);
    }
    let mut out = vec![Vec::new()];
    for &b in &bounds {
        out = out
            .into_iter()
            .flat_map(|e: Vec<u32>| {
                (0..b).map(move |k| {
                    let mut e = e.clone();
                    e.push(k);
                    e
                })
            })
            .collect();
    }
    let mut mons: Vec<Monomial> = out
        .into_iter()
        .map(Monomial)
        .filter(|m| !leads.iter().any(|l| l.divides(m)))
        .collect();
    mons.sort();
    Some(mons)
}

/// Rank of a list of vectors over `T`.
pub fn rank<T: Scalar>(rows: &[Vec<T>]) -> usize {
    let mut m: Vec<Vec<T>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone() / pivot.clone();
                for k in c..cols {
                    let t = f.clone() * m[r][k].clone();
                    m[i][k] = m[i][k].clone() - t;
                }
            }
        }
        r += 1;
    }
    r
}
