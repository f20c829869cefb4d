use iwa_exterior::mask::{self, *};
use iwa_exterior::{parse_form, render_form, Form, FormJson, Frame};
use iwa_scalars::{GScalar, Jet1, Matrix, MultiPoly, ParamPoint, ParamVar};
use proptest::prelude::*;

type F = Form<GScalar>;

fn g(n: i64) -> GScalar {
    GScalar::from_int(n)
}

fn scalar() -> impl Strategy<Value = GScalar> {
    (-4i64..=4, 1i64..=3, -4i64..=4, 1i64..=3).prop_map(|(a, b, c, d)| GScalar::gauss(a, b, c, d))
}

fn form() -> impl Strategy<Value = F> {
    prop::collection::vec((0u8..64, scalar()), 0..6).prop_map(Form::from_terms)
}

fn homogeneous(k: usize) -> impl Strategy<Value = F> {
    let basis = mask::of_degree(k);
    prop::collection::vec(scalar(), basis.len())
        .prop_map(move |v| Form::from_vec(&basis, &v))
}

fn small() -> impl Strategy<Value = GScalar> {
    (-1i64..=1, 3i64..=6, -1i64..=1, 3i64..=6).prop_map(|(a, b, c, d)| GScalar::gauss(a, b, c, d))
}

/// α_t, β_t, γ_t and conjugates written out by hand.
fn kuranishi_rows(t: &[GScalar; 6]) -> Matrix<GScalar> {
    let [t11, t12, t21, t22, t31, t32] = t.clone();
    let d = &t11 * &t22 - &t12 * &t21;
    let z = GScalar::zero;
    let o = GScalar::one;
    let hol = vec![
        vec![o(), z(), z(), t11, t12, z()],
        vec![z(), o(), z(), t21, t22, z()],
        vec![z(), z(), o(), t31, t32, -d],
    ];
    let mut rows = hol.clone();
    for r in &hol {
        rows.push(vec![
            r[3].conj(),
            r[4].conj(),
            r[5].conj(),
            r[0].conj(),
            r[1].conj(),
            r[2].conj(),
        ]);
    }
    Matrix::from_rows(rows)
}

#[test]
fn d_squared_vanishes_on_all_monomials() {
    for m in 0..=TOP {
        assert!(F::monomial(m, g(1)).d().d().is_zero(), "{}", mask::name(m));
        let p = Form::monomial(m, MultiPoly::t(1, 2) * MultiPoly::s(2, 1));
        assert!(p.d().d().is_zero());
        let j = Form::monomial(m, Jet1::var(&ParamPoint::zero(), ParamVar::S12));
        assert!(j.d().d().is_zero());
    }
}

#[test]
fn wedge_examples() {
    let a = F::covector(0);
    assert!(a.wedge(&a).is_zero());
    let all: Vec<F> = (0..6).map(F::covector).collect();
    assert_eq!(Form::wedge_all(&all), F::monomial(TOP, g(1)));

    let i = GScalar::i();
    let w0 = F::monomial(ALPHA | ALPHA_BAR, i.clone())
        + F::monomial(BETA | BETA_BAR, i.clone())
        + F::monomial(GAMMA | GAMMA_BAR, i);
    // (iαᾱ+iββ̄+iγγ̄)² = −2(αᾱββ̄ + αᾱγγ̄ + ββ̄γγ̄)
    let aa = F::covector(0).wedge(&F::covector(3));
    let bb = F::covector(1).wedge(&F::covector(4));
    let cc = F::covector(2).wedge(&F::covector(5));
    let expected = (aa.wedge(&bb) + aa.wedge(&cc) + bb.wedge(&cc)).scale(&g(-2));
    assert_eq!(w0.wedge(&w0), expected);
}

#[test]
fn contraction_examples() {
    let omega = F::monomial(HOL, g(1));
    assert_eq!(omega.contract(0), F::monomial(BETA | GAMMA, g(1)));
    assert_eq!(omega.contract(2), F::monomial(ALPHA | BETA, g(1)));
    assert!(F::covector(0).contract(1).is_zero());
}

#[test]
fn integration_normalisation() {
    // ∫ iαᾱ∧iββ̄∧iγγ̄ = 1
    let i = GScalar::i();
    let v = Form::wedge_all(&[
        F::monomial(ALPHA | ALPHA_BAR, i.clone()),
        F::monomial(BETA | BETA_BAR, i.clone()),
        F::monomial(GAMMA | GAMMA_BAR, i),
    ]);
    assert_eq!(v.integrate(), g(1));
}

#[test]
fn identity_frame_split_is_j0_split() {
    let fr = Frame::<GScalar>::identity();
    for m in 0..=TOP {
        let u = F::monomial(m, g(3));
        let parts = fr.split(&u);
        assert_eq!(parts.len(), 1);
        assert_eq!(parts.get(&mask::bidegree(m)), Some(&u));
    }
}

#[test]
fn text_round_trip_and_json() {
    let f = parse_form("al^ga^al~ + (1/2-i)*be^ga^be~ + -3*al~ + 2").unwrap();
    assert_eq!(render_form(&f), "2 + -3*al~ + al^ga^al~ + (1/2-i)*be^ga^be~");
    assert_eq!(parse_form(&render_form(&f)).unwrap(), f);
    let json = serde_json::to_string(&FormJson::from(&f)).unwrap();
    let back: FormJson = serde_json::from_str(&json).unwrap();
    assert_eq!(F::try_from(back).unwrap(), f);
    assert_eq!(render_form(&F::zero()), "0");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn conj_commutes_with_d(u in form()) {
        prop_assert_eq!(u.conj().d(), u.d().conj());
        prop_assert_eq!(u.conj().conj(), u);
    }

    #[test]
    fn wedge_graded_commutative(
        (a, b, x, y) in (0usize..=6, 0usize..=6)
            .prop_flat_map(|(a, b)| (Just(a), Just(b), homogeneous(a), homogeneous(b)))
    ) {
        let sign = if (a * b) % 2 == 0 { g(1) } else { g(-1) };
        prop_assert_eq!(x.wedge(&y), y.wedge(&x).scale(&sign));
        prop_assert_eq!(x.wedge(&y).conj(), x.conj().wedge(&y.conj()));
    }

    #[test]
    fn leibniz_rules(x in homogeneous(2), y in form(), z in homogeneous(3), k in 0usize..6) {
        // d(x∧y) = dx∧y + x∧dy for even x; odd z picks up a sign
        prop_assert_eq!(x.wedge(&y).d(), x.d().wedge(&y) + x.wedge(&y.d()));
        prop_assert_eq!(z.wedge(&y).d(), z.d().wedge(&y) - z.wedge(&y.d()));
        prop_assert_eq!(x.wedge(&y).contract(k), x.contract(k).wedge(&y) + x.wedge(&y.contract(k)));
        prop_assert_eq!(z.wedge(&y).contract(k), z.contract(k).wedge(&y) - z.wedge(&y.contract(k)));
    }

    #[test]
    fn kuranishi_frames_are_integrable(t in prop::array::uniform6(small()), u in form()) {
        let fr = Frame::new(kuranishi_rows(&t)).unwrap();
        // round trip through frame coordinates
        prop_assert_eq!(fr.from_frame(&fr.to_frame(&u)), u.clone());
        // pieces add back up
        let total = fr.split(&u).into_values().fold(F::zero(), |acc, p| acc + p);
        prop_assert_eq!(total, u.clone());
        for m in 0..=TOP {
            prop_assert!(fr.integrability_defect(m).is_zero(), "defect at {}", mask::name(m));
        }
        // d = ∂ + ∂̄ and both square to zero
        prop_assert_eq!(fr.del(&u) + fr.delbar(&u), u.d());
        prop_assert!(fr.delbar(&fr.delbar(&u)).is_zero());
        prop_assert!(fr.del(&fr.del(&u)).is_zero());
        // γ_t is pure (1,0)
        let gamma_t = fr.covector(2);
        prop_assert_eq!(fr.part(&gamma_t, 1, 0), gamma_t);
        // dual vectors
        for k in 0..6 {
            let c = fr.contract(k, &fr.covector(k));
            prop_assert_eq!(c, F::scalar(g(1)));
        }
    }
}
