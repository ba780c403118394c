use num_rational::Rational64;
use proptest::prelude::*;
use stringyk::cyclotomic::{cyclotomic_polynomial, euler_phi, trace_at, CyclicRepresentation, Cocycle2, CyclotomicNumber};
use stringyk::group::FiniteAbelianGroup;

type C = CyclotomicNumber<Rational64>;

const CONDUCTORS: [u32; 5] = [2, 3, 4, 5, 8];

fn number(n: u32) -> impl Strategy<Value = C> {
    prop::collection::vec((-4i64..5, 1i64..4), n as usize)
        .prop_map(move |cs| C::from_poly(n, cs.into_iter().map(|(a, b)| Rational64::new(a, b)).collect()))
}

fn triple() -> impl Strategy<Value = (C, C, C)> {
    prop::sample::select(&CONDUCTORS[..]).prop_flat_map(|n| (number(n), number(n), number(n)))
}

proptest! {
    #[test]
    fn field_axioms((a, b, c) in triple()) {
        let n = a.conductor();
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &C::one(n), a.clone());
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inverse().unwrap()).is_one());
            prop_assert_eq!(&(&b * &a).checked_div(&a).unwrap(), &b);
        } else {
            prop_assert!(a.inverse().is_err());
        }
    }

    #[test]
    fn zeta_has_exact_order(k in 0i64..40, idx in 0usize..5) {
        let n = CONDUCTORS[idx];
        prop_assert!(C::zeta(n).pow(n).is_one());
        prop_assert_eq!(C::zeta_pow(n, k), C::zeta(n).pow(k as u32));
    }

    #[test]
    fn traces_are_multiplicative(
        m in 2u32..9,
        a in prop::collection::vec((0i64..9, -2i64..3), 0..4),
        b in prop::collection::vec((0i64..9, -2i64..3), 0..4),
    ) {
        let g = FiniteAbelianGroup::cyclic(m).unwrap().generator(0);
        let (ra, rb) = (CyclicRepresentation::from_multiset(m, a), CyclicRepresentation::from_multiset(m, b));
        let tr = |r: &CyclicRepresentation| trace_at::<Rational64>(&g, r).unwrap();
        prop_assert_eq!(tr(&ra.tensor(&rb).unwrap()), &tr(&ra) * &tr(&rb));
        prop_assert_eq!(tr(&ra.add(&rb).unwrap()), &tr(&ra) + &tr(&rb));
        prop_assert_eq!(CyclicRepresentation::trivial(m).tensor(&ra).unwrap(), ra);
    }

    #[test]
    fn bilinear_cocycles_transgress_and_trivialize(
        idx in 0usize..4,
        form in prop::collection::vec(prop::collection::vec(-3i64..4, 2), 2),
    ) {
        let group = FiniteAbelianGroup::new([vec![2, 2], vec![2, 4], vec![3, 3], vec![4, 4]][idx].clone()).unwrap();
        let beta = Cocycle2::bilinear(&group, &form).unwrap();
        let elems = group.elements();
        for h1 in &elems {
            for h2 in &elems {
                let lhs = beta.transgress(&h1.compose(h2).unwrap()).unwrap();
                let rhs = beta.transgress(h1).unwrap().mul(&beta.transgress(h2).unwrap()).unwrap();
                prop_assert_eq!(lhs, rhs);
            }
        }
        for g in &elems {
            let t = beta.trivialize_on_cyclic(g).unwrap();
            for x in g.cyclic_subgroup() {
                for y in g.cyclic_subgroup() {
                    let xy = x.compose(&y).unwrap();
                    let d = t.at(&y).unwrap().mul(&t.at(&x).unwrap()).div(&t.at(&xy).unwrap());
                    prop_assert_eq!(d, beta.value(&x, &y).unwrap());
                }
            }
        }
    }
}

#[test]
fn character_orthogonality_for_small_groups() {
    for orders in [vec![2], vec![3], vec![4], vec![2, 2], vec![5], vec![6], vec![2, 4], vec![2, 2, 2], vec![3, 3]] {
        let group = FiniteAbelianGroup::new(orders).unwrap();
        let n = group.exponent();
        let chars = group.irreducible_characters();
        for chi in &chars {
            for psi in &chars {
                let mut sum = C::zero(n);
                for g in group.elements() {
                    let v = chi.eval(&g).unwrap().mul(&psi.conj().eval(&g).unwrap());
                    sum = &sum + &v.to_cyclotomic::<Rational64>(n).unwrap();
                }
                let expect = if chi == psi { group.size() as i64 } else { 0 };
                assert_eq!(sum, C::from_int(n, expect), "{chi} vs {psi} on {group}");
            }
        }
    }
}

#[test]
fn phi_matches_the_cyclotomic_degree() {
    for n in 1..30 {
        assert_eq!(cyclotomic_polynomial(n).len() - 1, euler_phi(n) as usize, "n = {n}");
    }
}
