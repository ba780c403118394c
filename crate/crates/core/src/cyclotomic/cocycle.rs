use num_integer::Integer;

use crate::cyclotomic::{CycloError, RootOfUnity};
use crate::group::{Character, FiniteAbelianGroup, GroupElement};

/// A normalized 2-cocycle `β : G × G → μ_∞`.
///
/// Values are exact roots of unity, so every identity is checked with
/// equality rather than a tolerance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cocycle2 {
    group: FiniteAbelianGroup,
    // row-major over `group.elements()`
    table: Vec<RootOfUnity>,
}

impl Cocycle2 {
    /// Tabulates `f` and checks normalization and the cocycle identity
    /// `β(g,h)β(gh,k) = β(g,hk)β(h,k)` on every triple.
    pub fn from_fn<F>(group: &FiniteAbelianGroup, mut f: F) -> Result<Self, CycloError>
    where
        F: FnMut(&GroupElement, &GroupElement) -> RootOfUnity,
    {
        let elems = group.elements();
        let mut table = Vec::with_capacity(elems.len() * elems.len());
        for g in &elems {
            for h in &elems {
                table.push(f(g, h));
            }
        }
        let beta = Cocycle2 {
            group: group.clone(),
            table,
        };
        beta.validate()?;
        Ok(beta)
    }

    /// The bilinear cocycle `β(g,h) = exp(2πi Σ gᵢ Mᵢⱼ hⱼ / gcd(nᵢ, nⱼ))`.
    /// Bilinear forms are always cocycles.
    pub fn bilinear(group: &FiniteAbelianGroup, form: &[Vec<i64>]) -> Result<Self, CycloError> {
        let n = group.exponent();
        let orders = group.orders().to_vec();
        Self::from_fn(group, |g, h| {
            let mut e = 0i64;
            for (i, row) in form.iter().enumerate() {
                for (j, &m) in row.iter().enumerate() {
                    // denominator gcd(nᵢ, nⱼ) keeps the value well defined on residues
                    let s = (n / orders[i].gcd(&orders[j])) as i64;
                    e += g.residues()[i] as i64 * m * h.residues()[j] as i64 * s;
                }
            }
            RootOfUnity::new(e, n)
        })
    }

    /// The constant cocycle `β ≡ 1`.
    pub fn trivial(group: &FiniteAbelianGroup) -> Self {
        Cocycle2 {
            group: group.clone(),
            table: vec![RootOfUnity::ONE; group.size() * group.size()],
        }
    }

    /// `β · δγ` for a normalized cochain `γ` (`γ(e) = 1`); cohomologous to `β`.
    pub fn times_coboundary<F>(&self, mut gamma: F) -> Result<Self, CycloError>
    where
        F: FnMut(&GroupElement) -> RootOfUnity,
    {
        let elems = self.group.elements();
        let gam: Vec<RootOfUnity> = elems.iter().map(&mut gamma).collect();
        if !gam[0].is_one() {
            return Err(CycloError::NotNormalized);
        }
        let n = elems.len();
        let mut table = self.table.clone();
        for (i, g) in elems.iter().enumerate() {
            for (j, h) in elems.iter().enumerate() {
                let gh = self.group.index_of(&g.compose(h).unwrap()).unwrap();
                table[i * n + j] = table[i * n + j].mul(&gam[j].mul(&gam[i]).div(&gam[gh]));
            }
        }
        let out = Cocycle2 {
            group: self.group.clone(),
            table,
        };
        out.validate()?;
        Ok(out)
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn value(&self, g: &GroupElement, h: &GroupElement) -> Result<RootOfUnity, CycloError> {
        let i = self.group.index_of(g)?;
        let j = self.group.index_of(h)?;
        Ok(self.table[i * self.group.size() + j])
    }

    fn at(&self, i: usize, j: usize) -> RootOfUnity {
        self.table[i * self.group.size() + j]
    }

    fn validate(&self) -> Result<(), CycloError> {
        let elems = self.group.elements();
        let n = elems.len();
        for i in 0..n {
            if !self.at(0, i).is_one() || !self.at(i, 0).is_one() {
                return Err(CycloError::NotNormalized);
            }
        }
        let idx = |a: &GroupElement, b: &GroupElement| self.group.index_of(&a.compose(b).unwrap()).unwrap();
        for (i, g) in elems.iter().enumerate() {
            for (j, h) in elems.iter().enumerate() {
                let gh = idx(g, h);
                for (k, kk) in elems.iter().enumerate() {
                    let hk = idx(h, kk);
                    let lhs = self.at(i, j).mul(&self.at(gh, k));
                    let rhs = self.at(i, hk).mul(&self.at(j, k));
                    if lhs != rhs {
                        return Err(CycloError::NotACocycle {
                            g: g.to_string(),
                            h: h.to_string(),
                            k: kk.to_string(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// The homomorphism `g ↦ β(h,g) β(g,h)⁻¹`, returned as a character after
    /// checking that it is multiplicative.
    pub fn transgress(&self, h: &GroupElement) -> Result<Character, CycloError> {
        let elems = self.group.elements();
        let values: Vec<RootOfUnity> = elems
            .iter()
            .map(|g| Ok(self.value(h, g)?.div(&self.value(g, h)?)))
            .collect::<Result<_, CycloError>>()?;
        // read the exponents off the coordinate generators
        let mut exps = Vec::with_capacity(self.group.rank());
        for (i, &n) in self.group.orders().iter().enumerate() {
            let e = self.group.index_of(&self.group.generator(i))?;
            let e = values[e].exponent_over(n).ok_or(CycloError::NotMultiplicative)?;
            exps.push(e as i64);
        }
        let chi = self.group.character(&exps)?;
        for (g, v) in elems.iter().zip(&values) {
            if chi.eval(g)? != *v {
                return Err(CycloError::NotMultiplicative);
            }
        }
        Ok(chi)
    }

    /// A normalized cochain `γ` on `⟨g⟩` with `β(x,y) = γ(y) γ(xy)⁻¹ γ(x)`
    /// for all `x, y ∈ ⟨g⟩`.
    pub fn trivialize_on_cyclic(&self, g: &GroupElement) -> Result<CyclicTrivialization, CycloError> {
        self.group.check(g)?;
        let m = g.order();
        let sub = g.cyclic_subgroup();
        // c^m must equal Π_{i<m} β(g^i, g); any m-th root works
        let mut prod = RootOfUnity::ONE;
        for x in &sub {
            prod = prod.mul(&self.value(x, g)?);
        }
        let c = prod.root(m);
        let mut values = Vec::with_capacity(m as usize);
        values.push(RootOfUnity::ONE);
        for i in 1..m as usize {
            let prev = values[i - 1];
            values.push(prev.mul(&c).div(&self.value(&sub[i - 1], g)?));
        }
        let triv = CyclicTrivialization {
            generator: g.clone(),
            values,
        };
        for (i, x) in sub.iter().enumerate() {
            for (j, y) in sub.iter().enumerate() {
                let k = (i + j) % m as usize;
                let d = triv.values[j].mul(&triv.values[i]).div(&triv.values[k]);
                if d != self.value(x, y)? {
                    return Err(CycloError::NotACocycle {
                        g: x.to_string(),
                        h: y.to_string(),
                        k: g.to_string(),
                    });
                }
            }
        }
        Ok(triv)
    }
}

/// Values of a trivializing cochain on the powers of a generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicTrivialization {
    generator: GroupElement,
    values: Vec<RootOfUnity>,
}

impl CyclicTrivialization {
    pub fn generator(&self) -> &GroupElement {
        &self.generator
    }

    /// `γ(gⁱ)` for `i = 0 … |g|-1`.
    pub fn values(&self) -> &[RootOfUnity] {
        &self.values
    }

    /// `γ(x)` for `x ∈ ⟨g⟩`, `None` outside the subgroup.
    pub fn at(&self, x: &GroupElement) -> Option<RootOfUnity> {
        (0..self.values.len())
            .find(|&i| self.generator.multiple(i as i64) == *x)
            .map(|i| self.values[i])
    }

    /// Least common conductor of the values.
    pub fn conductor(&self) -> u32 {
        self.values.iter().fold(1, |a, v| a.lcm(&v.order()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_cocycle_transgresses_trivially() {
        let g = FiniteAbelianGroup::elementary_2(2);
        let beta = Cocycle2::trivial(&g);
        for h in g.elements() {
            assert!(beta.transgress(&h).unwrap().is_trivial());
        }
    }

    #[test]
    fn sign_cocycle_on_klein_four() {
        // β(g,h) = (-1)^{g₁h₂}
        let g = FiniteAbelianGroup::elementary_2(2);
        let beta = Cocycle2::bilinear(&g, &[vec![0, 1], vec![0, 0]]).unwrap();
        let h = g.element(&[0, 1]).unwrap();
        assert_eq!(beta.transgress(&h).unwrap(), g.character(&[1, 0]).unwrap());
        let h = g.element(&[1, 0]).unwrap();
        assert_eq!(beta.transgress(&h).unwrap(), g.character(&[0, 1]).unwrap());
    }

    #[test]
    fn symmetric_cocycle_has_trivial_transgression() {
        let g = FiniteAbelianGroup::cyclic(4).unwrap();
        let beta = Cocycle2::bilinear(&g, &[vec![1]]).unwrap();
        for h in g.elements() {
            assert!(beta.transgress(&h).unwrap().is_trivial());
        }
    }

    #[test]
    fn trivialization_on_z2_needs_i() {
        let g = FiniteAbelianGroup::cyclic(2).unwrap();
        let beta = Cocycle2::bilinear(&g, &[vec![1]]).unwrap();
        let one = g.generator(0);
        assert_eq!(beta.value(&one, &one).unwrap(), RootOfUnity::MINUS_ONE);
        let gamma = beta.trivialize_on_cyclic(&one).unwrap();
        assert_eq!(gamma.values(), &[RootOfUnity::ONE, RootOfUnity::new(1, 4)]);
        assert_eq!(gamma.conductor(), 4);
        let id = beta.trivialize_on_cyclic(&g.identity()).unwrap();
        assert_eq!(id.values(), &[RootOfUnity::ONE]);
    }

    #[test]
    fn rejects_non_cocycles() {
        let g = FiniteAbelianGroup::cyclic(3).unwrap();
        let bad = Cocycle2::from_fn(&g, |a, b| {
            if a.residues()[0] == 1 && b.residues()[0] == 1 {
                RootOfUnity::MINUS_ONE
            } else {
                RootOfUnity::ONE
            }
        });
        assert!(matches!(bad, Err(CycloError::NotACocycle { .. })));
        let unnormalized = Cocycle2::from_fn(&g, |_, _| RootOfUnity::MINUS_ONE);
        assert_eq!(unnormalized, Err(CycloError::NotNormalized));
    }
}
