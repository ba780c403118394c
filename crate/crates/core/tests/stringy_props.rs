use std::sync::OnceLock;

use num_rational::Rational64;
use proptest::prelude::*;
use stringyk::cyclotomic::CyclotomicNumber;
use stringyk::f2::alpha;
use stringyk::group::FiniteAbelianGroup;
use stringyk::sector::ProductGSpace;
use stringyk::stringy::{SectorElement, StringyRing};

type Q = Rational64;
type E = SectorElement<Q>;

struct Fixture {
    ring: StringyRing,
    basis: Vec<E>,
}

fn t6() -> &'static Fixture {
    static CELL: OnceLock<Fixture> = OnceLock::new();
    CELL.get_or_init(|| {
        let ring = StringyRing::new(ProductGSpace::t6(), alpha()).unwrap();
        let basis = ring.basis().unwrap();
        Fixture { ring, basis }
    })
}

/// Random combination of up to three basis elements of one sector.
fn element(f: &'static Fixture) -> impl Strategy<Value = E> {
    (0..f.basis.len(), prop::collection::vec((0..f.basis.len(), -3i64..4), 0..3)).prop_map(move |(seed, extra)| {
        let sector = f.basis[seed].sector().clone();
        let mut x = f.basis[seed].clone();
        for (i, c) in extra {
            let b = &f.basis[i];
            if *b.sector() == sector {
                x = x.add(&b.scale(&CyclotomicNumber::from_int(1, c))).unwrap();
            }
        }
        x
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn t6_star_is_associative(x in element(t6()), y in element(t6()), z in element(t6())) {
        let r = &t6().ring;
        let lhs = r.star(&r.star(&x, &y).unwrap(), &z).unwrap();
        let rhs = r.star(&x, &r.star(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn t6_unit_and_grading(x in element(t6()), y in element(t6())) {
        let r = &t6().ring;
        let u = r.unit::<Q>();
        prop_assert_eq!(&r.star(&u, &x).unwrap(), &x);
        prop_assert_eq!(&r.star(&x, &u).unwrap(), &x);
        let z = r.star(&x, &y).unwrap();
        prop_assert_eq!(z.sector(), &x.sector().compose(y.sector()).unwrap());
        prop_assert!(r.validate(&z).is_ok());
    }

    #[test]
    fn t6_star_is_bilinear(x in element(t6()), y in element(t6()), w in element(t6()), c in -3i64..4) {
        let r = &t6().ring;
        prop_assume!(y.sector() == w.sector());
        let c = CyclotomicNumber::from_int(1, c);
        let lhs = r.star(&x, &y.add(&w.scale(&c)).unwrap()).unwrap();
        let rhs = r.star(&x, &y).unwrap().add(&r.star(&x, &w).unwrap().scale(&c)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn point_ring_is_associative_and_commutative() {
    let ring = StringyRing::new(ProductGSpace::point(FiniteAbelianGroup::elementary_2(3)), alpha()).unwrap();
    let basis = ring.basis::<Q>().unwrap();
    assert_eq!(basis.len(), 22);
    for x in &basis {
        for y in &basis {
            let xy = ring.star(x, y).unwrap();
            assert_eq!(xy, ring.star(y, x).unwrap());
            for z in &basis {
                assert_eq!(ring.star(&xy, z).unwrap(), ring.star(x, &ring.star(y, z).unwrap()).unwrap());
            }
        }
    }
}

#[test]
fn untwisted_cyclic_point_ring_is_associative() {
    for n in [3, 4, 5] {
        let group = FiniteAbelianGroup::cyclic(n).unwrap();
        let ring = StringyRing::new(ProductGSpace::point(group), stringyk::f2::F2Polynomial::zero(1)).unwrap();
        let basis = ring.basis::<Q>().unwrap();
        let u = ring.unit::<Q>();
        for x in &basis {
            assert_eq!(&ring.star(&u, x).unwrap(), x);
            for y in &basis {
                let xy = ring.star(x, y).unwrap();
                for z in &basis {
                    assert_eq!(ring.star(&xy, z).unwrap(), ring.star(x, &ring.star(y, z).unwrap()).unwrap(), "Z{n}");
                }
            }
        }
    }
}
