use iwa_deformation::{ComplexStructure, TangentElement};
use iwa_exterior::mask::{ALPHA, ALPHA_BAR, BETA, BETA_BAR, GAMMA, GAMMA_BAR};
use iwa_exterior::{parse_form, Form, Frame};
use iwa_hodge::Metric;
use iwa_mirror::*;
use iwa_scalars::{sample_points, GScalar, Matrix, ParamPoint, ParamVar, SampleSpec};
use proptest::prelude::*;

fn f(s: &str) -> Form<GScalar> {
    parse_form(s).unwrap()
}

fn g(a: i64, b: i64) -> GScalar {
    GScalar::from_ratio(a, b)
}

fn samples(seed: u64, count: usize) -> Vec<ParamPoint> {
    sample_points(&SampleSpec {
        seed,
        count,
        ..SampleSpec::default()
    })
}

fn signs(s: &str) -> Vec<Sign> {
    s.chars()
        .filter_map(|c| match c {
            '+' => Some(Sign::Plus),
            '-' => Some(Sign::Minus),
            _ => None,
        })
        .collect()
}

#[test]
fn pairings_on_monomials() {
    // ∫ αβγᾱβ̄γ̄ = −i, so Q(αβγ, ᾱβ̄γ̄) = i and H(αβγ, αβγ) = −1.
    let top = f("al^be^ga");
    assert_eq!(pairing(PairingKind::Q, &top, &top.conj()).unwrap(), GScalar::i());
    assert_eq!(pairing(PairingKind::H, &top, &top).unwrap(), GScalar::from_int(-1));
    let ab = f("al^be");
    assert_eq!(pairing(PairingKind::HB, &ab, &ab).unwrap(), GScalar::one());
    assert!(matches!(
        pairing(PairingKind::Q, &ab, &ab),
        Err(MirrorError::DegreeMismatch(_))
    ));
    assert!(matches!(
        pairing(PairingKind::QB, &f("al^ga"), &ab),
        Err(MirrorError::DegreeMismatch(_))
    ));
}

#[test]
fn signatures_match_printed_values() {
    let cases = [
        (NamedSpace::H21Gamma, "(-,+,+,+)"),
        (NamedSpace::F2, "(-,-,+,+,+)"),
        (NamedSpace::F1B, "(+,+,-,-,-)"),
        (NamedSpace::H11B, "(+,-,-,-)"),
    ];
    for (space, want) in cases {
        let m = named_pairing(space).unwrap();
        assert!(m.is_hermitian());
        assert_eq!(m.signature().unwrap(), signs(want), "{space}");
        assert_eq!(render_signs(&m.signature().unwrap()), want);
    }
}

#[test]
fn pivot_signs_handle_zero_diagonal() {
    // [[0,1],[1,0]] has inertia (1,1)
    let m = Matrix::from_rows(vec![vec![GScalar::zero(), GScalar::one()], vec![GScalar::one(), GScalar::zero()]]);
    let mut s = hermitian_pivot_signs(&m);
    s.sort_by_key(|x| *x as u8);
    assert_eq!(s, vec![Sign::Minus, Sign::Plus]);
    let m = Matrix::from_rows(vec![vec![GScalar::zero(), GScalar::i()], vec![-GScalar::i(), GScalar::zero()]]);
    let mut s = hermitian_pivot_signs(&m);
    s.sort_by_key(|x| *x as u8);
    assert_eq!(s, vec![Sign::Minus, Sign::Plus]);
}

fn small() -> impl Strategy<Value = GScalar> {
    (-3i64..=3, -3i64..=3).prop_map(|(a, b)| GScalar::gauss(a, 1, b, 1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn inertia_is_congruence_invariant(p in proptest::collection::vec(small(), 25)) {
        let h = named_pairing(NamedSpace::F2).unwrap();
        let pm = Matrix::from_rows((0..5).map(|i| p[5 * i..5 * i + 5].to_vec()).collect());
        prop_assume!(!pm.determinant().is_zero());
        let g = &(&pm * &h.entries) * &pm.conj_transpose();
        let mut moved = h.clone();
        moved.entries = g;
        prop_assert!(moved.is_hermitian());
        prop_assert_eq!(moved.inertia(), h.inertia());
    }
}

#[test]
fn star_split_at_origin() {
    let m = Metric::standard();
    let split = star_split(&m);
    assert_eq!(split.plus.len() + split.minus.len(), 10);
    let h = |u: &Form<GScalar>, v: &Form<GScalar>| pairing(PairingKind::H, u, v).unwrap();
    for u in &split.plus {
        assert!(h(u, u).re() > &num_rational::BigRational::from_integer(0.into()));
        for v in &split.minus {
            assert!(h(u, v).is_zero());
        }
    }
    for u in &split.minus {
        assert!(h(u, u).re() < &num_rational::BigRational::from_integer(0.into()));
    }
    assert_eq!(eigen_of_class(&m, &f("al^ga^al~ + be^ga^be~")).unwrap(), Some(Eigen::Minus));
    assert_eq!(eigen_of_class(&m, &f("al^ga^al~ + -be^ga^be~")).unwrap(), Some(Eigen::Plus));
    assert_eq!(eigen_of_class(&m, &f("al^be^ga")).unwrap(), Some(Eigen::Minus));
}

#[test]
fn frame_star_agrees_with_metric_star() {
    for t in samples(3, 3) {
        let j = ComplexStructure::new(&t).unwrap();
        let m = Metric::canonical(j.clone());
        let u = f("al^ga^al~ + (1/2)*be^ga~ + (-i)*al^be^be~");
        let via_frame = j.frame().from_frame(&star_frame_coords(&j.frame().to_frame(&u)));
        assert_eq!(via_frame, m.star(&u), "t = {t}");
    }
}

#[test]
fn default_symplectic_basis() {
    let b = SymplecticBasis::standard();
    assert!(b.is_standard());
    for x in b.eta.iter().chain(&b.nu) {
        assert!(x.d().is_zero());
    }
    let h = RealH3::new();
    for x in b.eta.iter().chain(&b.nu) {
        assert!(h.real_coords(x).is_ok());
    }
    // Q is alternating and non-degenerate on the real basis
    let gram = h.gram();
    assert_eq!(gram.clone(), gram.transpose().map(|x| -x.clone()));
    assert!(!gram.determinant().is_zero());
    // H(η₀^{2,1}, η₀^{2,1}) = −∫(iαᾱ+iββ̄)²∧iγγ̄ = −2
    let e = eta0_21();
    assert_eq!(pairing(PairingKind::H, &e, &e).unwrap(), GScalar::from_int(-2));
}

#[test]
fn gram_schmidt_completion_and_errors() {
    let b = symplectic_complete(&default_etas()[0]).unwrap();
    assert_eq!(b.eta.len(), 5);
    assert!(b.is_standard());
    assert_eq!(b.eta[0], default_etas()[0]);
    assert!(matches!(
        symplectic_complete(&Form::zero()),
        Err(MirrorError::IsotropyError(_))
    ));
    assert!(matches!(
        symplectic_complete(&f("al^be^ga")),
        Err(MirrorError::NotReal(_))
    ));
    let mut bad = default_etas().to_vec();
    bad[1] = SymplecticBasis::standard().nu[0].clone();
    assert!(matches!(complete_lagrangian(&bad), Err(MirrorError::IsotropyError(_))));
}

#[test]
fn z_coordinates_match_closed_forms() {
    let b = SymplecticBasis::standard();
    let z0 = coordinates_z(&ParamPoint::zero(), &b).unwrap();
    assert_eq!(z0, [GScalar::one(), GScalar::zero(), GScalar::zero(), GScalar::zero()]);
    for t in samples(11, 20) {
        assert_eq!(coordinates_z(&t, &b).unwrap(), z_closed_forms(&t).unwrap(), "t = {t}");
        let u = volume_form_from(&t.values12());
        let n = q_form(&u, &b.eta[0]);
        assert_eq!(n, normalization_closed_form(&t));
        assert_eq!(q_form(&u.scale(&n.inv().unwrap()), &b.eta[0]), GScalar::one());
    }
    assert!(matches!(
        coordinates_z(&ParamPoint::zero().with(ParamVar::T31, g(1, 3)), &b),
        Err(MirrorError::OffSlice)
    ));
}

#[test]
fn z_invariant_under_holomorphic_rescaling() {
    let b = SymplecticBasis::standard();
    for t in samples(12, 5) {
        let lambda = GScalar::one() + t.t(1, 1);
        let u = volume_form_from(&t.values12()).scale(&lambda);
        let n = q_form(&u, &b.eta[0]).inv().unwrap();
        let z: Vec<GScalar> = (1..5).map(|i| q_form(&u, &b.eta[i]) * &n).collect();
        assert_eq!(z, coordinates_z(&t, &b).unwrap().to_vec());
    }
}

#[test]
fn normalization_pole_is_reported() {
    // N = i(1+D²) + (t21−t12)(1+D) vanishes at t21 = −i, everything else 0
    let t = ParamPoint::zero().with(ParamVar::T21, -GScalar::i());
    let b = SymplecticBasis::standard();
    assert!(matches!(coordinates_z(&t, &b), Err(MirrorError::NormalizationPole(_))));
}

#[test]
fn potential_symmetry() {
    let b = SymplecticBasis::standard();
    let jac = z_jacobian(&ParamPoint::zero(), &b).unwrap();
    assert!(!jac.determinant().is_zero());
    let mut pts = vec![ParamPoint::zero()];
    pts.extend(samples(13, 5));
    for t in pts {
        let r = potential_symmetry_check(&t, &b).unwrap();
        assert!(r.is_symmetric(), "t = {t}: {:?}", r.asymmetry);
    }
}

#[test]
fn yukawa_vanishes_on_essential_directions() {
    let frame = Frame::identity();
    let u = f("al^be^ga");
    let basis: Vec<TangentElement> = (0..2).flat_map(|k| (0..2).map(move |j| TangentElement::basis(k, j))).collect();
    let mut ext = basis.clone();
    ext.extend((0..2).map(|j| TangentElement::basis(2, j)));
    for a in &ext {
        for b in &ext {
            for c in &ext {
                assert!(yukawa([a, b, c], &frame, &u).is_zero());
            }
        }
    }
    // normalization: ξ_α⊗ᾱ, ξ_β⊗β̄, ξ_γ⊗γ̄ gives ∫αβγ∧ᾱβ̄γ̄ = −i
    let (x, y, z) = (TangentElement::basis(0, 0), TangentElement::basis(1, 1), TangentElement::basis(2, 2));
    assert_eq!(yukawa([&x, &y, &z], &frame, &u), -GScalar::i());
}

/// Independent oracle: Y = det-like mixed form Σ ε_abc ε_jkl c1_aj c2_bk c3_cl · ∫u∧ᾱβ̄γ̄.
fn yukawa_oracle(t: [&TangentElement; 3]) -> GScalar {
    let eps = |a: usize, b: usize, c: usize| -> i64 {
        if a == b || b == c || a == c {
            0
        } else if (a, b, c) == (0, 1, 2) || (a, b, c) == (1, 2, 0) || (a, b, c) == (2, 0, 1) {
            1
        } else {
            -1
        }
    };
    let mut s = GScalar::zero();
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                for j in 0..3 {
                    for k in 0..3 {
                        for l in 0..3 {
                            let e = eps(a, b, c) * eps(j, k, l);
                            if e != 0 {
                                s = s + GScalar::from_int(e)
                                    * &t[0].coeffs[a][j]
                                    * &t[1].coeffs[b][k]
                                    * &t[2].coeffs[c][l];
                            }
                        }
                    }
                }
            }
        }
    }
    s * -GScalar::i()
}

fn tangent() -> impl Strategy<Value = TangentElement> {
    proptest::collection::vec(small(), 9).prop_map(|v| TangentElement {
        coeffs: std::array::from_fn(|k| std::array::from_fn(|j| v[3 * k + j].clone())),
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn yukawa_symmetric_trilinear_and_matches_oracle(a in tangent(), b in tangent(), c in tangent(), d in tangent(), s in small()) {
        let frame = Frame::identity();
        let u = parse_form("al^be^ga").unwrap();
        let y = |x: &TangentElement, y: &TangentElement, z: &TangentElement| yukawa([x, y, z], &frame, &u);
        let v = y(&a, &b, &c);
        prop_assert_eq!(&v, &yukawa_oracle([&a, &b, &c]));
        prop_assert_eq!(&v, &y(&b, &a, &c));
        prop_assert_eq!(&v, &y(&a, &c, &b));
        prop_assert_eq!(&v, &y(&c, &b, &a));
        let lhs = y(&a.scale(&s).add(&d), &b, &c);
        prop_assert_eq!(lhs, s * v + y(&d, &b, &c));
    }
}

#[test]
fn yukawa_cross_oracle_within_budget() {
    let b = SymplecticBasis::standard();
    let r = yukawa_cross_check(&b, &g(1, 64)).unwrap();
    assert_eq!(r.yukawa_nonzero, 0);
    assert!(r.pass, "{r:?}");
}

#[test]
fn w_coordinates() {
    let etas = torus_etas();
    // η₀^{3,0} = η_{0,B}^{2,0} ∧ γ
    let e20 = iwa_exterior::Form::monomial(ALPHA | BETA, GScalar::one());
    assert_eq!(etas[0].coeff(ALPHA | BETA), GScalar::one());
    assert_eq!(e20.wedge(&Form::monomial(GAMMA, GScalar::one())), f("al^be^ga"));
    assert_eq!(default_etas()[0].filter(|m| m == ALPHA | BETA | GAMMA), f("al^be^ga"));
    for e in &etas {
        assert_eq!(e.conj(), *e);
    }
    let w0 = coordinates_w(&ParamPoint::zero()).unwrap();
    assert!(!w_jacobian(&ParamPoint::zero()).unwrap().determinant().is_zero());
    let pts = samples(21, 50);
    let ws: Vec<_> = pts.iter().map(|t| coordinates_w(t).unwrap()).collect();
    for i in 0..pts.len() {
        for j in 0..i {
            if pts[i] != pts[j] {
                assert_ne!(ws[i], ws[j], "{} vs {}", pts[i], pts[j]);
            }
        }
    }
    assert_eq!(w0[1], GScalar::zero());
}

#[test]
fn torus_model() {
    for t in std::iter::once(ParamPoint::zero()).chain(samples(22, 6)) {
        let b = TorusModel::new(&t);
        assert_eq!(b.h2_dimension(), 6);
        assert_eq!(b.filtration_dims(), (1, 5));
        assert!(b.h20_matches_h30());
    }
}

#[test]
fn positive_mirror_map_matches_formula() {
    let m0 = mirror_map_positive(&ParamPoint::zero()).unwrap();
    assert!(m0.marked);
    assert_eq!(m0.coeffs, omega0_sq_coords());
    for t in samples(31, 20) {
        let m = mirror_map_positive(&t).unwrap();
        assert_eq!(m.coeffs, positive_formula(&t), "t = {t}");
        assert!(gauduchon_witness(&m).unwrap().is_some());
    }
    assert!(discarded_term_class().unwrap().iter().all(GScalar::is_zero));
    let e = mirror_map_positive(&ParamPoint::zero().with(ParamVar::T11, GScalar::one()));
    assert!(matches!(e, Err(MirrorError::NotPositive(_))));
}

#[test]
fn complexified_mirror_map() {
    let m0 = mirror_map_complexified(&ParamPoint::zero()).unwrap();
    assert!(m0.marked);
    assert_eq!(complexified_differential().unwrap(), a0_on_tangents().unwrap());
    for t in samples(32, 10) {
        let m = mirror_map_complexified(&t).unwrap();
        assert_eq!(m.marked, t.is_zero());
        assert!(gauduchon_witness(&m).unwrap().is_some(), "t = {t}");
    }
    // injective: distinct t give distinct images
    let a = mirror_map_complexified(&ParamPoint::zero().with(ParamVar::T11, g(1, 5))).unwrap();
    let b = mirror_map_complexified(&ParamPoint::zero().with(ParamVar::T22, g(1, 5))).unwrap();
    assert_ne!(a, b);
    // tangent images are −∂u_t/∂t at 0 for t11, t12 and +∂u_t/∂t for t21, t22
    let _ = (ALPHA_BAR, BETA_BAR, GAMMA_BAR);
}

#[test]
fn isomorphisms() {
    let a0 = iso_a(&ParamPoint::zero()).unwrap();
    assert!(a0.is_identity());
    for t in samples(41, 3) {
        assert!(iso_a(&t).unwrap().is_identity());
        assert!(iso_b(&t).unwrap().is_identity());
        assert_eq!(lift_i(&t).unwrap().rank, 4);
        let sq = conclusion_square(&t).unwrap();
        assert!(sq.commutes);
        assert_eq!((sq.rank_q_t, sq.rank_q11, sq.rank_composite), (4, 4, 4));
    }
}

#[test]
fn bc31_injection() {
    let r = bc31_to_aeppli(&ParamPoint::zero()).unwrap();
    assert_eq!(r.bc_dimension, 2);
    assert_eq!(r.domain_rank, 2);
    assert_eq!(r.map.rank, 2);
    assert!(r.images_closed);
    for t in samples(42, 3) {
        let r = bc31_to_aeppli(&t).unwrap();
        assert_eq!((r.bc_dimension, r.domain_rank, r.map.rank), (2, 2, 2), "t = {t}");
    }
}

#[test]
fn vhs_verdicts() {
    let r = vhs_checks().unwrap();
    for v in r.verdicts() {
        assert!(v.holds, "{}: {:?}", v.name, v.witnesses);
    }
    assert!(r.f2_holomorphic.witnesses.iter().any(|w| w.contains("∂Γ1/∂s12")));
    assert_eq!(r.second_iso_obstruction.len(), 4);
}
