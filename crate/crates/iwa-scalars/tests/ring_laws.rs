use iwa_scalars::{GScalar, Jet1, MultiPoly, ParamPoint, ParamVar, RatFunc};
use proptest::prelude::*;

fn gscalar() -> impl Strategy<Value = GScalar> {
    (-6i64..=6, 1i64..=5, -6i64..=6, 1i64..=5).prop_map(|(a, b, c, d)| GScalar::gauss(a, b, c, d))
}

fn small_scalar() -> impl Strategy<Value = GScalar> {
    (-2i64..=2, 1i64..=4, -2i64..=2, 1i64..=4).prop_map(|(a, b, c, d)| GScalar::gauss(a, b, c, d))
}

fn poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((prop::array::uniform12(0u8..=2), gscalar()), 0..5).prop_map(|terms| {
        MultiPoly::from_terms(terms.into_iter().map(|(mut e, c)| {
            // keep total degree small
            for x in e.iter_mut().skip(4) {
                *x = 0;
            }
            (e, c)
        }))
    })
}

fn point() -> impl Strategy<Value = ParamPoint> {
    prop::array::uniform6(small_scalar()).prop_map(ParamPoint::new)
}

fn jet_at(base: ParamPoint) -> impl Strategy<Value = Jet1> {
    (gscalar(), prop::collection::vec(gscalar(), 12))
        .prop_map(move |(v, p)| Jet1::from_parts(Some(base.clone()), v, p))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn gscalar_field_laws(a in gscalar(), b in gscalar(), c in gscalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert!(GScalar::from_rational(a.norm_sqr()) == &a * &a.conj());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), GScalar::one());
        }
    }

    #[test]
    fn multipoly_ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
    }

    #[test]
    fn jet_ring_laws((a, b, c) in point().prop_flat_map(|p| (jet_at(p.clone()), jet_at(p.clone()), jet_at(p)))) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
    }

    #[test]
    fn jet_value_matches_eval(p in poly(), q in poly(), pt in point()) {
        prop_assert_eq!(p.eval_jet(&pt).value().clone(), p.eval(&pt));
        // product rule against direct polynomial multiplication
        prop_assert_eq!((&p * &q).eval_jet(&pt), &p.eval_jet(&pt) * &q.eval_jet(&pt));
        // conjugation commutes with jet evaluation
        prop_assert_eq!(p.conj().eval_jet(&pt), p.eval_jet(&pt).conj());
    }

    #[test]
    fn ratfunc_equality_is_an_equivalence(a in poly(), b in poly(), k in poly(), pt in point()) {
        prop_assume!(!b.is_zero() && !k.is_zero());
        let f = RatFunc::new(a.clone(), b.clone()).unwrap();
        let g = RatFunc::new(&a * &k, &b * &k).unwrap();
        let h = RatFunc::new(&(&a * &k) * &k, &(&b * &k) * &k).unwrap();
        prop_assert!(f == f.clone());
        prop_assert!(f == g && g == f);
        prop_assert!(g == h && f == h);
        if let (Ok(x), Ok(y)) = (f.eval(&pt), g.eval(&pt)) {
            prop_assert_eq!(x, y);
        }
    }
}

#[test]
fn poly_eval_examples() {
    let p = MultiPoly::t(1, 1) * MultiPoly::s(1, 1);
    let pt = ParamPoint::zero().with(ParamVar::T11, "1/2+1/3i".parse().unwrap());
    assert_eq!(p.eval(&pt), GScalar::from_ratio(13, 36));
    assert_eq!(MultiPoly::one().eval(&pt), GScalar::one());
}

#[test]
fn ratfunc_eval_examples() {
    let f = RatFunc::new(MultiPoly::one(), &MultiPoly::one() - &(MultiPoly::t(2, 2) * MultiPoly::s(2, 2))).unwrap();
    assert_eq!(f.eval(&ParamPoint::zero()).unwrap(), GScalar::one());
    let pole = RatFunc::new(MultiPoly::one(), MultiPoly::t(1, 1)).unwrap();
    assert!(pole.eval(&ParamPoint::zero()).is_err());
    assert!(pole.jet_lift(&ParamPoint::zero()).is_err());
}

#[test]
fn jet_lift_examples() {
    let zero = ParamPoint::zero();
    let j = RatFunc::from_poly(MultiPoly::s(1, 2)).jet_lift(&zero).unwrap();
    assert!(j.value().is_zero());
    for v in ParamVar::ALL {
        let expected = if v == ParamVar::S12 { GScalar::one() } else { GScalar::zero() };
        assert_eq!(j.partial(v), &expected);
    }
    let j = RatFunc::from_poly(MultiPoly::t(1, 1) * MultiPoly::s(1, 2)).jet_lift(&zero).unwrap();
    assert!(j.is_zero());
    // quotient rule: d(1/(1 - t11))/dt11 at 0 is 1
    let f = RatFunc::new(MultiPoly::one(), &MultiPoly::one() - &MultiPoly::t(1, 1)).unwrap();
    assert_eq!(f.jet_lift(&zero).unwrap().partial(ParamVar::T11), &GScalar::one());
}

#[test]
fn point_json_round_trip() {
    let p: ParamPoint = "t11=1/2,t32=-1/3+i".parse().unwrap();
    let json = serde_json::to_string(&p).unwrap();
    assert_eq!(serde_json::from_str::<ParamPoint>(&json).unwrap(), p);
}
