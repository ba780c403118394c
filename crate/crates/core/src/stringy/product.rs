use super::{LocalEigenData, SectorElement, StringyError};
use crate::cyclotomic::CyclotomicNumber;
use crate::f2::F2Polynomial;
use crate::group::{Character, GroupElement};
use crate::scalar::Scalar;
use crate::sector::{component_rank, twist_character, BasisWord, FactorKind, FactorSpace, KClass, ProductGSpace};

/// The twisted stringy ring of `[M/G]` for a product space `M` and a
/// twisting class `α ∈ H⁴(BG)`, computed component by component.
///
/// For sectors `g`, `k` and a component `h`, the product pulls `E_h` and
/// `F_h` back to `M^{g,k,h}`, multiplies there, and pushes forward to
/// `M^{gk,h}` factor by factor:
///
/// * a factor that is `4*` in `M^{g,k}` but `T²` in `M^{gk}`, and still
///   `T²` in `M^{gk,h}`: point classes go to `t`;
/// * the same, but `4*` in `M^{gk,h}`: multiplication by `1 − χ(h)`, the
///   value at `h` of the Euler class of the normal line;
/// * any other factor: the identity.
#[derive(Debug, Clone)]
pub struct StringyRing {
    space: ProductGSpace,
    alpha: F2Polynomial,
    transversal: Vec<GroupElement>,
}

impl StringyRing {
    pub fn new(space: ProductGSpace, alpha: F2Polynomial) -> Result<Self, StringyError> {
        let id = space.group().identity();
        // checks integrality and that the class fits the group
        component_rank(&space, &id, &id, &alpha)?;
        let transversal = space.group().cyclic_transversal();
        Ok(StringyRing {
            space,
            alpha,
            transversal,
        })
    }

    pub fn space(&self) -> &ProductGSpace {
        &self.space
    }

    pub fn alpha(&self) -> &F2Polynomial {
        &self.alpha
    }

    pub fn transversal(&self) -> &[GroupElement] {
        &self.transversal
    }

    fn fixed(&self, s: &[&GroupElement]) -> Result<ProductGSpace, StringyError> {
        let s: Vec<GroupElement> = s.iter().map(|&g| g.clone()).collect();
        Ok(self.space.fixed_set(&s)?)
    }

    fn twist(&self, g: &GroupElement, h: &GroupElement) -> Result<Character, StringyError> {
        Ok(twist_character(self.space.group(), &self.alpha, g, h)?)
    }

    /// Basis words spanning component `h` of sector `g`.
    pub fn component_basis(&self, g: &GroupElement, h: &GroupElement) -> Result<Vec<BasisWord>, StringyError> {
        let fixed = self.fixed(&[g, h])?;
        let twist = self.twist(g, h)?;
        let mut out = Vec::new();
        for w in fixed.basis_words() {
            if fixed.word_character(&w).mul(&twist)?.is_trivial() {
                out.push(w);
            }
        }
        Ok(out)
    }

    /// All basis elements of all sectors.
    pub fn basis<T: Scalar>(&self) -> Result<Vec<SectorElement<T>>, StringyError> {
        let mut out = Vec::new();
        for g in self.space.group().elements() {
            for h in &self.transversal {
                for w in self.component_basis(&g, h)? {
                    out.push(SectorElement::basis(g.clone(), h.clone(), w));
                }
            }
        }
        Ok(out)
    }

    /// `Σ_h 1` in the untwisted sector.
    pub fn unit<T: Scalar>(&self) -> SectorElement<T> {
        let id = self.space.group().identity();
        let mut x = SectorElement::zero(id.clone());
        for h in &self.transversal {
            let fixed = self.space.fixed_set(&[h.clone()]).expect("element of the group");
            x.set_component(h.clone(), KClass::unit(&fixed.kinds()));
        }
        x
    }

    /// Checks that every component sits at a transversal element, uses
    /// words of `M^{g,h}`, is invariant under the twisted action, and has
    /// coefficients in `ℚ(ζ_{|h|})`.
    pub fn validate<T: Scalar>(&self, x: &SectorElement<T>) -> Result<(), StringyError> {
        let g = x.sector();
        self.space.group().check(g)?;
        for (h, class) in x.components() {
            let fail = |reason: String| StringyError::Unsupported {
                sector: g.to_string(),
                h: h.to_string(),
                reason,
            };
            self.space.group().check(h)?;
            if !self.transversal.contains(h) {
                return Err(fail("component index is not in the cyclic transversal".into()));
            }
            let fixed = self.fixed(&[g, h])?;
            let kinds = fixed.kinds();
            let twist = self.twist(g, h)?;
            for (w, c) in class.terms() {
                if !w.fits(&kinds) {
                    return Err(fail(format!("{w} is not a basis word of K*({fixed})")));
                }
                if !fixed.word_character(w).mul(&twist)?.is_trivial() {
                    return Err(fail(format!("{w} is not invariant (component rank may be 0)")));
                }
                if c.promote(h.order()).is_err() && c.as_rational().is_none() {
                    return Err(fail(format!("coefficient {c} is not in Q(z{})", h.order())));
                }
            }
        }
        Ok(())
    }

    /// Normal data of `M^{g,k}` in `M`: one line per torus that collapses.
    fn normal_data(&self, g: &GroupElement, k: &GroupElement) -> Result<LocalEigenData, StringyError> {
        let fixed = self.fixed(&[g, k])?;
        let chars: Vec<(Character, u32)> = self
            .space
            .factors()
            .iter()
            .zip(fixed.factors())
            .filter_map(|(f, x)| match (f, x) {
                (FactorSpace::TwoTorus(chi), FactorSpace::FourPoints) => Some((chi.clone(), 1)),
                _ => None,
            })
            .collect();
        LocalEigenData::from_characters(self.space.group(), &chars)
    }

    /// The stringy product `x ⋆ y`, landing in sector `gk`.
    pub fn star<T: Scalar>(&self, x: &SectorElement<T>, y: &SectorElement<T>) -> Result<SectorElement<T>, StringyError> {
        self.validate(x)?;
        self.validate(y)?;
        let (g, k) = (x.sector(), y.sector());
        let gk = g.compose(k)?;
        if !self.normal_data(g, k)?.obstruction_ab(g, k)?.is_empty() {
            return Err(StringyError::Obstruction {
                g: g.to_string(),
                h: k.to_string(),
            });
        }
        let m_gk_pair = self.fixed(&[g, k])?;
        let m_gk = self.fixed(&[&gk])?;
        let mut out = SectorElement::zero(gk.clone());
        for (h, e) in x.components() {
            let Some(f) = y.component(h) else { continue };
            let src_e = self.fixed(&[g, h])?;
            let src_f = self.fixed(&[k, h])?;
            let meet = self.fixed(&[g, k, h])?;
            let target = self.fixed(&[&gk, h])?;
            let e = restrict(e, &src_e, &meet);
            let f = restrict(f, &src_f, &meet);
            let prod = e.mul(&f, &meet.kinds());
            let pushed = prod.map_factors(|i, b| {
                let one = CyclotomicNumber::one(1);
                let normal = m_gk_pair.factors()[i].kind() == FactorKind::FourPoints
                    && m_gk.factors()[i].kind() == FactorKind::TwoTorus;
                if !normal {
                    return vec![(one, b)];
                }
                match target.factors()[i].kind() {
                    FactorKind::TwoTorus => b.push_to_torus().into_iter().map(|t| (one.clone(), t)).collect(),
                    _ => {
                        let FactorSpace::TwoTorus(chi) = &self.space.factors()[i] else {
                            unreachable!("only tori have normal directions")
                        };
                        let value: CyclotomicNumber<T> =
                            chi.eval(h).expect("same group").to_cyclotomic_minimal();
                        vec![(&one - &value, b)]
                    }
                }
            });
            out.set_component(h.clone(), pushed);
        }
        self.validate(&out)?;
        Ok(out)
    }
}

/// Pulls a class back along `meet ⊂ source`, factor by factor.
fn restrict<T: Scalar>(class: &KClass<T>, source: &ProductGSpace, meet: &ProductGSpace) -> KClass<T> {
    class.map_factors(|i, b| {
        let one = CyclotomicNumber::one(1);
        match (source.factors()[i].kind(), meet.factors()[i].kind()) {
            (FactorKind::TwoTorus, FactorKind::FourPoints) => {
                b.restrict_to_points().into_iter().map(|p| (one.clone(), p)).collect()
            }
            _ => vec![(one, b)],
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::f2::alpha;
    use crate::group::FiniteAbelianGroup;
    use crate::sector::sector_rank;
    use num_rational::Rational64;

    type X = SectorElement<Rational64>;

    fn e(r: &[i64]) -> GroupElement {
        FiniteAbelianGroup::elementary_2(3).element(r).unwrap()
    }

    fn word(s: &str) -> BasisWord {
        BasisWord::parse(s, 3).unwrap()
    }

    #[test]
    fn basis_sizes_match_ranks() {
        let ring = StringyRing::new(ProductGSpace::t6(), alpha()).unwrap();
        for g in ring.space().group().elements() {
            let count: usize = ring
                .transversal()
                .iter()
                .map(|h| ring.component_basis(&g, h).unwrap().len())
                .sum();
            assert_eq!(count as u64, sector_rank(ring.space(), &g, &alpha()).unwrap());
        }
    }

    #[test]
    fn unit_is_neutral_on_t6_basis() {
        let ring = StringyRing::new(ProductGSpace::t6(), alpha()).unwrap();
        let u: X = ring.unit();
        for b in ring.basis::<Rational64>().unwrap().iter().step_by(7) {
            assert_eq!(&ring.star(&u, b).unwrap(), b);
            assert_eq!(&ring.star(b, &u).unwrap(), b);
        }
    }

    #[test]
    fn pushforward_cases() {
        let ring = StringyRing::new(ProductGSpace::t6(), alpha()).unwrap();
        let (g, k) = (e(&[1, 0, 0]), e(&[1, 1, 0]));
        // h = 0: the first factor is pushed into the torus
        let x = X::basis(g.clone(), e(&[0, 0, 0]), word("e1⊗1⊗1"));
        let y = X::basis(k.clone(), e(&[0, 0, 0]), word("e1⊗e2⊗1"));
        let z = ring.star(&x, &y).unwrap();
        assert_eq!(z.sector(), &e(&[0, 1, 0]));
        let expected = X::basis(e(&[0, 1, 0]), e(&[0, 0, 0]), word("t⊗e2⊗1"));
        assert_eq!(z, expected);
        // h = (1,0,0): multiplication by 2 on the first factor
        let x = X::basis(g.clone(), e(&[1, 0, 0]), word("e3⊗1⊗1"));
        let y = X::basis(k.clone(), e(&[1, 0, 0]), word("e3⊗e4⊗θ1"));
        let z = ring.star(&x, &y).unwrap();
        let two = CyclotomicNumber::from_int(1, 2);
        assert_eq!(z, X::basis(e(&[0, 1, 0]), e(&[1, 0, 0]), word("e3⊗e4⊗θ1")).scale(&two));
    }

    #[test]
    fn rejects_unsupported_components() {
        let ring = StringyRing::new(ProductGSpace::t6(), alpha()).unwrap();
        let bad = X::basis(e(&[1, 0, 0]), e(&[0, 1, 1]), word("e1⊗e1⊗e1"));
        assert!(matches!(ring.validate(&bad), Err(StringyError::Unsupported { .. })));
        let wrong_shape = X::basis(e(&[1, 0, 0]), e(&[0, 0, 0]), word("1⊗1⊗1"));
        assert!(ring.validate(&wrong_shape).is_err());
        let odd = X::basis(e(&[1, 0, 0]), e(&[0, 0, 0]), word("e1⊗θ1⊗1"));
        assert!(ring.validate(&odd).is_err());
    }

    #[test]
    fn point_products() {
        let g = FiniteAbelianGroup::elementary_2(3);
        let ring = StringyRing::new(ProductGSpace::point(g.clone()), alpha()).unwrap();
        let one = |a: &[i64], b: &[i64]| X::basis(e(a), e(b), BasisWord::new(vec![]));
        let z = ring.star(&one(&[1, 0, 0], &[1, 0, 0]), &one(&[1, 0, 0], &[1, 0, 0])).unwrap();
        assert_eq!(z, one(&[0, 0, 0], &[1, 0, 0]));
        let z = ring.star(&one(&[1, 0, 0], &[0, 0, 0]), &one(&[0, 1, 0], &[0, 0, 0])).unwrap();
        assert_eq!(z, one(&[1, 1, 0], &[0, 0, 0]));
        let z = ring.star(&one(&[1, 0, 0], &[1, 0, 0]), &one(&[1, 0, 0], &[0, 0, 0])).unwrap();
        assert!(z.is_zero());
    }

    #[test]
    fn untwisted_cyclic_group() {
        let z4 = FiniteAbelianGroup::cyclic(4).unwrap();
        let ring = StringyRing::new(ProductGSpace::point(z4.clone()), F2Polynomial::zero(1)).unwrap();
        let basis = ring.basis::<Rational64>().unwrap();
        assert_eq!(basis.len(), 4 * 3);
        let u: X = ring.unit();
        for b in &basis {
            assert_eq!(&ring.star(&u, b).unwrap(), b);
        }
        let g = z4.generator(0);
        let zeta = X::basis(g.clone(), g.clone(), BasisWord::new(vec![])).scale(&CyclotomicNumber::zeta(4));
        assert!(ring.validate(&zeta).is_ok());
        let zeta8 = X::basis(g.clone(), g.clone(), BasisWord::new(vec![])).scale(&CyclotomicNumber::zeta(8));
        assert!(ring.validate(&zeta8).is_err());
    }
}
