//! Finite abelian groups given as products of cyclic groups, their elements,
//! and their characters.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use thiserror::Error;

use crate::cyclotomic::RootOfUnity;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("group needs at least one cyclic factor")]
    Empty,
    #[error("cyclic factor of order {0} (orders must be at least 2)")]
    BadOrder(u32),
    #[error("element {element} does not belong to the group {group}")]
    Mismatch { element: String, group: String },
    #[error("cannot parse {0:?}")]
    Parse(String),
}

/// `ℤ/n₁ × ℤ/n₂ × … × ℤ/n_r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteAbelianGroup {
    orders: Vec<u32>,
}

impl FiniteAbelianGroup {
    pub fn new(orders: Vec<u32>) -> Result<Self, GroupError> {
        if orders.is_empty() {
            return Err(GroupError::Empty);
        }
        if let Some(&bad) = orders.iter().find(|&&n| n < 2) {
            return Err(GroupError::BadOrder(bad));
        }
        Ok(FiniteAbelianGroup { orders })
    }

    /// `(ℤ/2)^k`.
    pub fn elementary_2(k: usize) -> Self {
        Self::new(vec![2; k]).expect("k ≥ 1")
    }

    pub fn cyclic(n: u32) -> Result<Self, GroupError> {
        Self::new(vec![n])
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn size(&self) -> usize {
        self.orders.iter().map(|&n| n as usize).product()
    }

    pub fn exponent(&self) -> u32 {
        self.orders.iter().fold(1, |a, b| a.lcm(b))
    }

    /// True for `(ℤ/2)^k`.
    pub fn is_elementary_2(&self) -> bool {
        self.orders.iter().all(|&n| n == 2)
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement {
            residues: vec![0; self.orders.len()],
            orders: self.orders.clone(),
        }
    }

    /// Builds an element, reducing residues modulo the orders.
    pub fn element(&self, residues: &[i64]) -> Result<GroupElement, GroupError> {
        if residues.len() != self.orders.len() {
            return Err(GroupError::Mismatch {
                element: format!("{residues:?}"),
                group: self.to_string(),
            });
        }
        Ok(GroupElement {
            residues: residues
                .iter()
                .zip(&self.orders)
                .map(|(&r, &n)| r.rem_euclid(n as i64) as u32)
                .collect(),
            orders: self.orders.clone(),
        })
    }

    /// Unit vector in coordinate `i`.
    pub fn generator(&self, i: usize) -> GroupElement {
        let mut g = self.identity();
        g.residues[i] = 1;
        g
    }

    /// All elements in lexicographic order of their residue vectors.
    pub fn elements(&self) -> Vec<GroupElement> {
        let mut out = Vec::with_capacity(self.size());
        let mut cur = vec![0u32; self.orders.len()];
        loop {
            out.push(GroupElement {
                residues: cur.clone(),
                orders: self.orders.clone(),
            });
            let mut i = cur.len();
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                cur[i] += 1;
                if cur[i] < self.orders[i] {
                    break;
                }
                cur[i] = 0;
            }
        }
    }

    /// Position of `g` in [`elements`](Self::elements).
    pub fn index_of(&self, g: &GroupElement) -> Result<usize, GroupError> {
        self.check(g)?;
        Ok(g.residues
            .iter()
            .zip(&self.orders)
            .fold(0usize, |acc, (&r, &n)| acc * n as usize + r as usize))
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        g.orders == self.orders
    }

    pub fn check(&self, g: &GroupElement) -> Result<(), GroupError> {
        if self.contains(g) {
            Ok(())
        } else {
            Err(GroupError::Mismatch {
                element: g.to_string(),
                group: self.to_string(),
            })
        }
    }

    /// One generator for every cyclic subgroup, always the lexicographically
    /// least one. Contains the identity and is sorted.
    pub fn cyclic_transversal(&self) -> Vec<GroupElement> {
        let mut seen: BTreeSet<Vec<GroupElement>> = BTreeSet::new();
        let mut out = Vec::new();
        for g in self.elements() {
            let mut sub = g.cyclic_subgroup();
            sub.sort();
            if seen.insert(sub) {
                out.push(g);
            }
        }
        out
    }

    pub fn trivial_character(&self) -> Character {
        Character {
            exponents: vec![0; self.orders.len()],
            orders: self.orders.clone(),
        }
    }

    pub fn character(&self, exponents: &[i64]) -> Result<Character, GroupError> {
        let g = self.element(exponents)?;
        Ok(Character {
            exponents: g.residues,
            orders: g.orders,
        })
    }

    /// All `|G|` characters, ordered lexicographically by exponent vector.
    pub fn irreducible_characters(&self) -> Vec<Character> {
        self.elements()
            .into_iter()
            .map(|g| Character {
                exponents: g.residues,
                orders: g.orders,
            })
            .collect()
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let first = self.orders[0];
        if self.orders.len() > 1 && self.orders.iter().all(|&n| n == first) {
            return write!(f, "Z{}^{}", first, self.orders.len());
        }
        let parts: Vec<String> = self.orders.iter().map(|n| format!("Z{n}")).collect();
        write!(f, "{}", parts.join("x"))
    }
}

/// Parses `Z2^3`, `Z4xZ2`, `Z2^2xZ3`.
impl FromStr for FiniteAbelianGroup {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, GroupError> {
        let err = || GroupError::Parse(s.to_string());
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut orders = Vec::new();
        for part in cleaned.split(['x', '×']) {
            let body = part
                .strip_prefix('Z')
                .or_else(|| part.strip_prefix('ℤ'))
                .ok_or_else(err)?;
            let body = body.strip_prefix('/').unwrap_or(body);
            let (n, reps) = match body.split_once('^') {
                Some((n, k)) => (n, k.parse::<usize>().map_err(|_| err())?),
                None => (body, 1),
            };
            let n: u32 = n.parse().map_err(|_| err())?;
            orders.extend(std::iter::repeat_n(n, reps));
        }
        FiniteAbelianGroup::new(orders)
    }
}

/// An element of a [`FiniteAbelianGroup`]; carries the parent's orders so
/// that mixing groups is detected.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    residues: Vec<u32>,
    orders: Vec<u32>,
}

impl GroupElement {
    pub fn residues(&self) -> &[u32] {
        &self.residues
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn group(&self) -> FiniteAbelianGroup {
        FiniteAbelianGroup {
            orders: self.orders.clone(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.residues.iter().all(|&r| r == 0)
    }

    pub fn compose(&self, other: &GroupElement) -> Result<GroupElement, GroupError> {
        if self.orders != other.orders {
            return Err(GroupError::Mismatch {
                element: other.to_string(),
                group: self.group().to_string(),
            });
        }
        Ok(GroupElement {
            residues: self
                .residues
                .iter()
                .zip(&other.residues)
                .zip(&self.orders)
                .map(|((&a, &b), &n)| (a + b) % n)
                .collect(),
            orders: self.orders.clone(),
        })
    }

    pub fn inverse(&self) -> GroupElement {
        GroupElement {
            residues: self
                .residues
                .iter()
                .zip(&self.orders)
                .map(|(&a, &n)| (n - a) % n)
                .collect(),
            orders: self.orders.clone(),
        }
    }

    /// `m · g`.
    pub fn multiple(&self, m: i64) -> GroupElement {
        GroupElement {
            residues: self
                .residues
                .iter()
                .zip(&self.orders)
                .map(|(&a, &n)| (a as i64 * m).rem_euclid(n as i64) as u32)
                .collect(),
            orders: self.orders.clone(),
        }
    }

    /// Least `n ≥ 1` with `n · g = 0`.
    pub fn order(&self) -> u32 {
        self.residues
            .iter()
            .zip(&self.orders)
            .map(|(&a, &n)| n / a.gcd(&n))
            .fold(1, |acc, m| acc.lcm(&m))
    }

    /// `[0, g, 2g, …, (|g|-1)g]`.
    pub fn cyclic_subgroup(&self) -> Vec<GroupElement> {
        (0..self.order() as i64).map(|m| self.multiple(m)).collect()
    }

    /// Parses `1,0,1` as an element of `group`.
    pub fn parse(text: &str, group: &FiniteAbelianGroup) -> Result<GroupElement, GroupError> {
        let residues: Result<Vec<i64>, _> = text
            .split(',')
            .map(|t| t.trim().parse::<i64>())
            .collect();
        let residues = residues.map_err(|_| GroupError::Parse(text.to_string()))?;
        group.element(&residues)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.residues.iter().map(|r| r.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// A homomorphism `G → S¹`, `g ↦ exp(2πi Σ eᵢ gᵢ / nᵢ)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Character {
    exponents: Vec<u32>,
    orders: Vec<u32>,
}

impl Character {
    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn group(&self) -> FiniteAbelianGroup {
        FiniteAbelianGroup {
            orders: self.orders.clone(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// Multiplicative order of the character.
    pub fn order(&self) -> u32 {
        GroupElement {
            residues: self.exponents.clone(),
            orders: self.orders.clone(),
        }
        .order()
    }

    pub fn eval(&self, g: &GroupElement) -> Result<RootOfUnity, GroupError> {
        if g.orders != self.orders {
            return Err(GroupError::Mismatch {
                element: g.to_string(),
                group: self.group().to_string(),
            });
        }
        let l = self.group().exponent();
        let e: i64 = self
            .exponents
            .iter()
            .zip(&g.residues)
            .zip(&self.orders)
            .map(|((&e, &r), &n)| e as i64 * r as i64 * (l / n) as i64)
            .sum();
        Ok(RootOfUnity::new(e, l))
    }

    pub fn mul(&self, other: &Character) -> Result<Character, GroupError> {
        if self.orders != other.orders {
            return Err(GroupError::Mismatch {
                element: format!("character {other}"),
                group: self.group().to_string(),
            });
        }
        Ok(Character {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .zip(&self.orders)
                .map(|((&a, &b), &n)| (a + b) % n)
                .collect(),
            orders: self.orders.clone(),
        })
    }

    pub fn conj(&self) -> Character {
        Character {
            exponents: self
                .exponents
                .iter()
                .zip(&self.orders)
                .map(|(&a, &n)| (n - a) % n)
                .collect(),
            orders: self.orders.clone(),
        }
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.exponents.iter().map(|r| r.to_string()).collect();
        write!(f, "chi({})", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2_3() -> FiniteAbelianGroup {
        FiniteAbelianGroup::elementary_2(3)
    }

    #[test]
    fn compose_examples() {
        let g = z2_3();
        let a = g.element(&[1, 0, 0]).unwrap();
        let b = g.element(&[1, 1, 0]).unwrap();
        assert_eq!(a.compose(&b).unwrap(), g.element(&[0, 1, 0]).unwrap());
        assert_eq!(a.compose(&g.identity()).unwrap(), a);
        let z4 = FiniteAbelianGroup::cyclic(4).unwrap();
        let s = z4.element(&[1]).unwrap().compose(&z4.element(&[3]).unwrap());
        assert!(s.unwrap().is_identity());
        assert!(a.compose(&z4.identity()).is_err());
    }

    #[test]
    fn orders() {
        let g = z2_3();
        assert_eq!(g.identity().order(), 1);
        assert_eq!(g.element(&[1, 1, 0]).unwrap().order(), 2);
        let z4 = FiniteAbelianGroup::cyclic(4).unwrap();
        assert_eq!(z4.element(&[2]).unwrap().order(), 2);
        let mixed: FiniteAbelianGroup = "Z4xZ6".parse().unwrap();
        assert_eq!(mixed.element(&[1, 2]).unwrap().order(), 12);
        assert_eq!(mixed.element(&[2, 1]).unwrap().order(), 6);
    }

    #[test]
    fn transversals() {
        assert_eq!(z2_3().cyclic_transversal().len(), 8);
        let z2 = FiniteAbelianGroup::cyclic(2).unwrap();
        assert_eq!(z2.cyclic_transversal(), z2.elements());
        let z4 = FiniteAbelianGroup::cyclic(4).unwrap();
        let t: Vec<String> = z4.cyclic_transversal().iter().map(|g| g.to_string()).collect();
        assert_eq!(t, ["0", "1", "2"]);
    }

    #[test]
    fn characters() {
        let z2 = FiniteAbelianGroup::cyclic(2).unwrap();
        let chars = z2.irreducible_characters();
        assert_eq!(chars.len(), 2);
        assert!(chars[0].is_trivial());
        assert_eq!(chars[1].eval(&z2.generator(0)).unwrap(), RootOfUnity::MINUS_ONE);
        assert_eq!(z2_3().irreducible_characters().len(), 8);
        let z3 = FiniteAbelianGroup::cyclic(3).unwrap();
        for chi in z3.irreducible_characters() {
            for g in z3.elements() {
                assert_eq!(3 % chi.eval(&g).unwrap().order(), 0);
            }
        }
    }

    #[test]
    fn parsing() {
        let g: FiniteAbelianGroup = "Z2^3".parse().unwrap();
        assert_eq!(g, z2_3());
        let h: FiniteAbelianGroup = "Z4xZ2".parse().unwrap();
        assert_eq!(h.orders(), &[4, 2]);
        assert_eq!(h.to_string(), "Z4xZ2");
        assert_eq!(g.to_string(), "Z2^3");
        assert!("Z1".parse::<FiniteAbelianGroup>().is_err());
        assert!("Q2".parse::<FiniteAbelianGroup>().is_err());
        let e = GroupElement::parse("1,0,1", &g).unwrap();
        assert_eq!(e.to_string(), "1,0,1");
        assert!(GroupElement::parse("1,0", &g).is_err());
        assert!(GroupElement::parse("1,a,0", &g).is_err());
    }

    #[test]
    fn index_matches_enumeration() {
        let g: FiniteAbelianGroup = "Z3xZ4".parse().unwrap();
        for (i, e) in g.elements().iter().enumerate() {
            assert_eq!(g.index_of(e).unwrap(), i);
        }
    }
}
