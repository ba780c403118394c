use num_rational::Rational64;
use proptest::prelude::*;
use stringyk::cyclotomic::CyclotomicNumber;
use stringyk::wproj::{WPStringyElement, WeightedProjective};

type Q = Rational64;
type W = WPStringyElement<Q>;

fn space() -> impl Strategy<Value = WeightedProjective> {
    (prop::sample::select(vec![2u32, 3, 5, 7]), 1u32..5).prop_map(|(p, n)| WeightedProjective::new(p, n).unwrap())
}

fn coeff() -> impl Strategy<Value = Q> {
    (-4i64..5, 1i64..3).prop_map(|(a, b)| Q::new(a, b))
}

/// A random element of sector `j`.
fn element(w: &WeightedProjective) -> impl Strategy<Value = W> {
    let (p, n) = (w.p(), w.n() as usize);
    let w = w.clone();
    (0..p, prop::collection::vec(coeff(), n + 1), prop::collection::vec(coeff(), p as usize - 1)).prop_map(
        move |(j, poly, cy)| {
            let q = CyclotomicNumber::from_poly(p, cy);
            if j == 0 {
                w.untwisted(w.ring_element(poly, q).unwrap()).unwrap()
            } else {
                w.twisted(j, poly[0], q).unwrap()
            }
        },
    )
}

fn instance() -> impl Strategy<Value = (WeightedProjective, W, W, W)> {
    space().prop_flat_map(|w| {
        let (x, y, z) = (element(&w), element(&w), element(&w));
        (Just(w), x, y, z)
    })
}

proptest! {
    #[test]
    fn associative((w, x, y, z) in instance()) {
        let s = |a: &W, b: &W| w.star(a, b).unwrap();
        prop_assert_eq!(s(&s(&x, &y), &z), s(&x, &s(&y, &z)));
    }

    #[test]
    fn commutative_with_unit_and_graded((w, x, y, _z) in instance()) {
        let s = |a: &W, b: &W| w.star(a, b).unwrap();
        prop_assert_eq!(s(&x, &y), s(&y, &x));
        prop_assert_eq!(&s(&w.unit(), &x), &x);
        prop_assert_eq!(s(&x, &y).sector(), (x.sector() + y.sector()) % w.p());
    }

    #[test]
    fn pushforward_then_pullback_multiplies_by_euler_class(w in space(), r in coeff(), c in prop::collection::vec(coeff(), 6)) {
        let p = w.p();
        let q = CyclotomicNumber::from_poly(p, c[..p as usize - 1].to_vec());
        let (r2, q2) = w.pullback(&w.pushforward(&r, &q));
        let euler = (&CyclotomicNumber::one(p) - &CyclotomicNumber::zeta(p)).pow(w.n());
        prop_assert!(r2 == Q::from_integer(0));
        prop_assert_eq!(q2, &q * &euler);
    }
}

#[test]
fn presentation_holds_on_lines_only() {
    for p in [2, 3, 5, 7] {
        for n in 1..=3 {
            let r = WeightedProjective::new(p, n).unwrap().chen_ruan_presentation_check::<Q>().unwrap();
            assert!(r.relations_hold && r.products_agree && r.surjective());
            assert_eq!(r.table_dim as u32, n + p);
            assert_eq!(r.quotient_dim as u32, n * p + 1);
            assert_eq!(r.passes(), n == 1, "p={p} n={n}");
        }
    }
}
