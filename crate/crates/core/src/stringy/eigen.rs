//! Rotation numbers of commuting group elements on the summands of a
//! normal bundle, and the bundles built from them: obstruction bundles,
//! the fractional bundles `F_g`, the virtual bundle `B_{g,h}`, and the
//! excess bundle appearing in the associativity check.

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Zero};

use super::StringyError;
use crate::group::{Character, FiniteAbelianGroup, GroupElement};

/// One simultaneous eigen-summand with its rotation numbers in `[0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenSummand {
    pub multiplicity: u32,
    pub rotations: BTreeMap<GroupElement, Rational64>,
}

/// Local data of an abelian action on a normal bundle, split into
/// simultaneous eigen-summands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalEigenData {
    group: FiniteAbelianGroup,
    summands: Vec<EigenSummand>,
}

/// `e^{2πi a} = χ(g)` with `a ∈ [0, 1)`.
fn rotation_of(chi: &Character, g: &GroupElement) -> Rational64 {
    let r = chi.eval(g).expect("same group");
    Rational64::new(r.exponent() as i64, r.order() as i64)
}

impl LocalEigenData {
    /// Validates rotations: every element is present, values lie in
    /// `[0, 1)` with denominator dividing the element's order, the identity
    /// rotates by 0, and rotations add modulo 1.
    pub fn new(group: FiniteAbelianGroup, summands: Vec<EigenSummand>) -> Result<Self, StringyError> {
        let elements = group.elements();
        for (j, s) in summands.iter().enumerate() {
            let bad = |why: &str| StringyError::EigenData(format!("summand {j}: {why}"));
            if s.multiplicity == 0 {
                return Err(bad("multiplicity must be positive"));
            }
            for g in &elements {
                let a = s.rotations.get(g).ok_or_else(|| bad(&format!("no rotation for {g}")))?;
                if *a < Rational64::zero() || *a >= Rational64::one() {
                    return Err(bad(&format!("rotation {a} of {g} is outside [0, 1)")));
                }
                if (g.order() as i64) % a.denom() != 0 {
                    return Err(bad(&format!("rotation {a} does not fit the order of {g}")));
                }
            }
            if !s.rotations[&group.identity()].is_zero() {
                return Err(bad("identity rotates"));
            }
            for g in &elements {
                for h in &elements {
                    let gh = g.compose(h)?;
                    if frac(s.rotations[g] + s.rotations[h]) != s.rotations[&gh] {
                        return Err(bad(&format!("rotations of {g} and {h} do not add")));
                    }
                }
            }
            if s.rotations.len() != elements.len() {
                return Err(bad("rotation given for an element outside the group"));
            }
        }
        Ok(LocalEigenData { group, summands })
    }

    /// One summand per character, with the given multiplicities.
    pub fn from_characters(group: &FiniteAbelianGroup, chars: &[(Character, u32)]) -> Result<Self, StringyError> {
        let summands = chars
            .iter()
            .map(|(chi, m)| EigenSummand {
                multiplicity: *m,
                rotations: group.elements().into_iter().map(|g| (g.clone(), rotation_of(chi, &g))).collect(),
            })
            .collect();
        Self::new(group.clone(), summands)
    }

    /// `ℤ/p` acting on `ℂⁿ` by `W`, the normal data of the twisted sectors
    /// of `ℂP[p:1:…:1]`: `g_j` rotates each of the `n` lines by `j/p`.
    pub fn weighted_projective(p: u32, n: u32) -> Result<Self, StringyError> {
        let group = FiniteAbelianGroup::cyclic(p)?;
        let w = group.character(&[1])?;
        Self::from_characters(&group, &vec![(w, 1); n as usize])
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn summands(&self) -> &[EigenSummand] {
        &self.summands
    }

    fn rot(&self, j: usize, g: &GroupElement) -> Result<Rational64, StringyError> {
        self.summands[j]
            .rotations
            .get(g)
            .copied()
            .ok_or_else(|| StringyError::EigenData(format!("no rotation for {g}")))
    }

    fn fixed_by(&self, j: usize, s: &[GroupElement]) -> Result<bool, StringyError> {
        for g in s {
            if !self.rot(j, g)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Summands of `D_{g,h}`: rotations of `g` and `h` adding to more than 1.
    pub fn obstruction_ab(&self, g: &GroupElement, h: &GroupElement) -> Result<ObstructionSelection, StringyError> {
        let mut indices = BTreeSet::new();
        for j in 0..self.summands.len() {
            if self.rot(j, g)? + self.rot(j, h)? > Rational64::one() {
                indices.insert(j);
            }
        }
        Ok(ObstructionSelection { indices })
    }

    /// The same bundle read as `a + b + c = 2`, where `c` is the rotation of
    /// `(gh)⁻¹`.
    pub fn obstruction_abc(&self, g: &GroupElement, h: &GroupElement) -> Result<ObstructionSelection, StringyError> {
        let inv = g.compose(h)?.inverse();
        let two = Rational64::from_integer(2);
        let mut indices = BTreeSet::new();
        for j in 0..self.summands.len() {
            if self.rot(j, g)? + self.rot(j, h)? + self.rot(j, &inv)? == two {
                indices.insert(j);
            }
        }
        Ok(ObstructionSelection { indices })
    }

    /// Rational multiplicity of each summand in `F_g`.
    pub fn fractional_f(&self, g: &GroupElement) -> Result<Vec<Rational64>, StringyError> {
        (0..self.summands.len()).map(|j| self.rot(j, g)).collect()
    }

    /// Multiplicity `a + b + c − 1` of each summand in `B_{g,h}`; summands
    /// fixed by both `g` and `h` are tangent to `M^{g,h}` and get 0.
    pub fn virtual_b(&self, g: &GroupElement, h: &GroupElement) -> Result<Vec<Rational64>, StringyError> {
        let inv = g.compose(h)?.inverse();
        let mut out = Vec::with_capacity(self.summands.len());
        for j in 0..self.summands.len() {
            if self.fixed_by(j, &[g.clone(), h.clone()])? {
                out.push(Rational64::zero());
            } else {
                out.push(self.rot(j, g)? + self.rot(j, h)? + self.rot(j, &inv)? - Rational64::one());
            }
        }
        Ok(out)
    }

    /// `E(S, S₁, S₂) = TS|_V ⊕ TV ⊖ TS₁|_V ⊖ TS₂|_V` with `S = M^{fix_big}`,
    /// `Sᵢ = M^{fix_i}` and `V = S₁ ∩ S₂`, as a signed multiplicity per
    /// summand.
    pub fn excess_multiset(
        &self,
        fix_big: &[GroupElement],
        fix_1: &[GroupElement],
        fix_2: &[GroupElement],
    ) -> Result<Vec<i64>, StringyError> {
        let both: Vec<GroupElement> = fix_1.iter().chain(fix_2).cloned().collect();
        let mut out = Vec::with_capacity(self.summands.len());
        for j in 0..self.summands.len() {
            let ind = |s: &[GroupElement]| self.fixed_by(j, s).map(i64::from);
            let v = ind(fix_big)? + ind(&both)? - ind(fix_1)? - ind(fix_2)?;
            out.push(v * self.summands[j].multiplicity as i64);
        }
        Ok(out)
    }

    /// Compares both sides of
    /// `D_{g,h} ⊕ D_{gh,k} ⊕ E(M^{gh}, M^{g,h}, M^{gh,k})
    ///  = D_{g,hk} ⊕ D_{h,k} ⊕ E(M^{hk}, M^{g,hk}, M^{h,k})`
    /// on the summands normal to `N = M^{g,h,k}`.
    pub fn associativity_identity_holds(
        &self,
        g: &GroupElement,
        h: &GroupElement,
        k: &GroupElement,
    ) -> Result<bool, StringyError> {
        let gh = g.compose(h)?;
        let hk = h.compose(k)?;
        let lhs = self.side(&[(g, h), (&gh, k)], (&[gh.clone()], &[g.clone(), h.clone()], &[gh.clone(), k.clone()]))?;
        let rhs = self.side(&[(g, &hk), (h, k)], (&[hk.clone()], &[g.clone(), hk.clone()], &[h.clone(), k.clone()]))?;
        for j in 0..self.summands.len() {
            if self.fixed_by(j, &[g.clone(), h.clone(), k.clone()])? {
                continue;
            }
            if lhs[j] != rhs[j] {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn side(
        &self,
        obstructions: &[(&GroupElement, &GroupElement)],
        excess: (&[GroupElement], &[GroupElement], &[GroupElement]),
    ) -> Result<Vec<i64>, StringyError> {
        let mut total = self.excess_multiset(excess.0, excess.1, excess.2)?;
        for (a, b) in obstructions {
            for j in self.obstruction_ab(a, b)?.indices() {
                total[*j] += self.summands[*j].multiplicity as i64;
            }
        }
        Ok(total)
    }
}

fn frac(x: Rational64) -> Rational64 {
    x - x.floor()
}

/// A set of summand indices.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ObstructionSelection {
    indices: BTreeSet<usize>,
}

impl ObstructionSelection {
    pub fn indices(&self) -> &BTreeSet<usize> {
        &self.indices
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// Complex rank of the selected bundle.
    pub fn rank(&self, data: &LocalEigenData) -> u32 {
        self.indices.iter().map(|&j| data.summands[j].multiplicity).sum()
    }
}

impl LocalEigenData {
    /// Least common denominator of all rotation numbers.
    pub fn conductor(&self) -> i64 {
        self.summands
            .iter()
            .flat_map(|s| s.rotations.values())
            .fold(1, |acc, r| acc.lcm(r.denom()))
    }
}
