use iwa_cohomology::*;
use iwa_deformation::{build_structure, gamma_forms, nakamura_class, NakamuraClass};
use iwa_exterior::mask;
use iwa_exterior::{parse_form, Form};
use iwa_scalars::{sample_points, GScalar, Matrix, ParamPoint, ParamVar, SampleSpec};

type F = Form<GScalar>;

fn q(a: i64, b: i64) -> GScalar {
    GScalar::gauss(a, b, 0, 1)
}

fn form(s: &str) -> F {
    parse_form(s).unwrap()
}

fn samples(essential: bool, seed: u64, count: usize) -> Vec<ParamPoint> {
    sample_points(&SampleSpec {
        seed,
        count,
        max_den: 6,
        essential,
    })
}

fn complex_at(p: &ParamPoint) -> BigradedComplex {
    BigradedComplex::new(&build_structure(p).unwrap())
}

fn class_three_point() -> ParamPoint {
    ParamPoint::zero()
        .with(ParamVar::T11, q(1, 3))
        .with(ParamVar::T22, q(1, 4))
        .with(ParamVar::T21, q(-1, 5))
}

fn class_two_point() -> ParamPoint {
    ParamPoint::zero()
        .with(ParamVar::T11, q(1, 3))
        .with(ParamVar::T12, q(1, 4))
}

const DOLBEAULT_0: Grid = [[1, 2, 2, 1], [3, 6, 6, 3], [3, 6, 6, 3], [1, 2, 2, 1]];
const BOTT_CHERN_0: Grid = [[1, 2, 3, 1], [2, 4, 6, 2], [3, 6, 8, 3], [1, 2, 3, 1]];

/// Dolbeault dimensions at t = 0 computed straight from d and the type
/// split of the fixed coframe, without frames.
fn dolbeault_oracle(p: usize, q: usize) -> usize {
    let delbar = |p: usize, q: usize| -> Matrix<GScalar> {
        let src = mask::of_bidegree(p, q);
        let dst = if q < 3 { mask::of_bidegree(p, q + 1) } else { Vec::new() };
        let cols: Vec<Vec<GScalar>> = src
            .iter()
            .map(|&m| Form::monomial(m, GScalar::one()).d().part_j0(p, q + 1).to_vec(&dst))
            .collect();
        Matrix::from_cols(dst.len(), &cols)
    };
    let n = mask::of_bidegree(p, q).len();
    let rank_out = delbar(p, q).rank();
    let rank_in = if q == 0 { 0 } else { delbar(p, q - 1).rank() };
    n - rank_out - rank_in
}

#[test]
fn tables_at_origin() {
    let c = BigradedComplex::standard();
    let n = CohomologyNumbers::compute(&c).unwrap();
    assert_eq!(n.betti, [1, 4, 8, 10, 8, 4, 1]);
    assert_eq!(n.dolbeault, DOLBEAULT_0);
    assert_eq!(n.bott_chern, BOTT_CHERN_0);
    for p in 0..4 {
        for q in 0..4 {
            assert_eq!(n.dolbeault[p][q], dolbeault_oracle(p, q), "({p},{q})");
            assert_eq!(n.aeppli[p][q], BOTT_CHERN_0[3 - p][3 - q], "({p},{q})");
        }
    }
    assert_eq!(c.aeppli(2, 2).dimension(), 4);
    assert_eq!(c.bott_chern(1, 1).dimension(), 4);
    assert_eq!(n.e2[2][1], 4);
    assert_eq!(n.e2, n.e3);
    assert_eq!(n.e2, n.e_infinity);
}

#[test]
fn explicit_generators_at_origin() {
    let c = BigradedComplex::standard();
    let h01 = c.dolbeault(0, 1);
    assert_eq!(h01.class_rank(&[form("al~"), form("be~")]).unwrap(), 2);
    let h10 = c.dolbeault(1, 0);
    assert_eq!(h10.class_rank(&[form("al"), form("be"), form("ga")]).unwrap(), 3);
    let h21 = c.dolbeault(2, 1);
    let gens = ["al^ga^al~", "al^ga^be~", "be^ga^al~", "be^ga^be~", "al^be^al~", "al^be^be~"];
    assert_eq!(h21.class_rank(&gens.map(form)).unwrap(), 6);
    assert!(h21.is_boundary(&form("al^be^ga~")) || !h21.is_cycle(&form("al^be^ga~")));
    assert!(matches!(h21.class_coords(&form("al")), Err(CohomologyError::WrongDegree(_))));
}

#[test]
fn class_three_numbers() {
    let p = class_three_point();
    assert_eq!(nakamura_class(&p), NakamuraClass::ClassIII);
    let c = complex_at(&p);
    let n = CohomologyNumbers::compute(&c).unwrap();
    assert_eq!(n.dolbeault[2][0], 1);
    assert_eq!(n.dolbeault[1][1], 5);
    assert_eq!(n.dolbeault[0][2], 2);
    assert_eq!(n.dolbeault[2][1], 4);
    assert_eq!(n.dolbeault[1][0], 2);
    assert_eq!(n.dolbeault[0][1], 2);
    // E₁ degenerates
    for k in 0..7 {
        assert_eq!(CohomologyNumbers::diagonal_sum(&n.dolbeault, k), n.betti[k]);
    }
    assert_eq!(c.frolicher_e1(2, 1).dimension(), 4);
}

#[test]
fn frolicher_degenerates_at_e2() {
    let mut points = vec![ParamPoint::zero(), class_two_point(), class_three_point()];
    points.extend(samples(false, 3, 3));
    for p in &points {
        let c = complex_at(p);
        let n = CohomologyNumbers::compute(&c).unwrap();
        assert_eq!(n.betti, [1, 4, 8, 10, 8, 4, 1], "{p}");
        assert_eq!(n.e2[2][1], 4, "{p}");
        assert_eq!(n.e2, n.e3, "{p}");
        for k in 0..7 {
            assert_eq!(CohomologyNumbers::diagonal_sum(&n.e2, k), n.betti[k], "{p} k={k}");
            assert_eq!(CohomologyNumbers::diagonal_sum(&n.e_infinity, k), n.betti[k], "{p} k={k}");
        }
        for pp in 0..4 {
            for qq in 0..4 {
                assert_eq!(c.frolicher_filtered(2, pp, qq).dimension(), n.e2[pp][qq], "{p} ({pp},{qq})");
                assert_eq!(c.frolicher_filtered(1, pp, qq).dimension(), n.dolbeault[pp][qq], "{p}");
                // Serre duality
                assert_eq!(n.dolbeault[pp][qq], n.dolbeault[3 - pp][3 - qq], "{p}");
                assert_eq!(n.bott_chern[pp][qq], n.aeppli[3 - pp][3 - qq], "{p}");
            }
        }
    }
}

#[test]
fn bott_chern_aeppli_duality() {
    for p in [ParamPoint::zero(), class_three_point()] {
        let c = complex_at(&p);
        for pp in 0..4 {
            for qq in 0..4 {
                let bc = c.bott_chern(pp, qq);
                let ae = c.aeppli(3 - pp, 3 - qq);
                let m = duality_pairing(&bc, &ae).unwrap();
                assert_eq!(m.rows(), m.cols());
                assert_eq!(m.rank(), bc.dimension(), "{p} ({pp},{qq})");
            }
        }
    }
    let c = BigradedComplex::standard();
    let m = duality_pairing(&c.bott_chern(1, 1), &c.aeppli(2, 2)).unwrap();
    assert_eq!((m.rows(), m.rank()), (4, 4));
    let i = GScalar::i();
    let u = form("al^al~").scale(&i);
    let v = form("be^be~^ga^ga~").scale(&(i.clone() * i.clone()));
    assert!(!u.wedge(&v).integrate().is_zero());
    let w = form("al^al~^ga^ga~").scale(&(i.clone() * i));
    assert!(u.wedge(&w).integrate().is_zero());
    assert!(matches!(
        duality_pairing(&c.bott_chern(1, 1), &c.aeppli(1, 1)),
        Err(CohomologyError::KindMismatch(_))
    ));
}

#[test]
fn natural_maps_at_origin() {
    let c = BigradedComplex::standard();
    let mut all_iso = true;
    for p in 0..4 {
        for q in 0..4 {
            all_iso &= natural_map_is_iso(&c.bott_chern(p, q), &c.aeppli(p, q)).unwrap();
        }
    }
    assert!(!all_iso);
    // H^{3,0} → H³_DR injective
    for p in [ParamPoint::zero(), class_two_point(), class_three_point()] {
        let c = complex_at(&p);
        let h30 = c.dolbeault(3, 0);
        assert_eq!(natural_map_rank(&h30, &c.de_rham(3)).unwrap(), 1);
    }
}

#[test]
fn gamma_classes_span_rank_four() {
    let mut points = vec![ParamPoint::zero()];
    points.extend(samples(true, 11, 3));
    for p in &points {
        let j = build_structure(p).unwrap();
        let g = gamma_classes(&j).unwrap();
        assert_eq!((g.dolbeault_rank, g.de_rham_rank), (4, 4), "{p}");
    }
    // at the origin the span is [γ ∧ H^{1,1}(B)]
    let c = BigradedComplex::standard();
    let h21 = c.dolbeault(2, 1);
    let g = gamma_forms(&build_structure(&ParamPoint::zero()).unwrap()).unwrap();
    let mut both: Vec<F> = g.to_vec();
    both.extend(["al^ga^al~", "al^ga^be~", "be^ga^al~", "be^ga^be~"].map(form));
    assert_eq!(h21.class_rank(&both).unwrap(), 4);
}

#[test]
fn d1_well_defined_everywhere() {
    for p in [ParamPoint::zero(), class_two_point(), class_three_point()] {
        let c = complex_at(&p);
        for pp in 0..4 {
            for qq in 0..4 {
                c.check_d1(pp, qq).unwrap();
            }
        }
    }
}

#[test]
fn massey_products() {
    let (a, b) = (form("al"), form("be"));
    match massey_triple(&a, &b, &b).unwrap() {
        MasseyOutcome::Defined(m) => {
            assert!(!m.trivial);
            let h2 = BigradedComplex::standard().de_rham(2);
            let diff = m.representative.clone() - form("be^ga");
            assert!(h2.is_boundary(&diff) || h2.class_rank(&[diff]).unwrap() == 0);
        }
        MasseyOutcome::NotDefined => panic!("⟨α,β,β⟩ should be defined"),
    }
    assert!(!massey_triple(&a, &form("al~"), &b).unwrap().is_defined());
    let aab = massey_triple(&a, &a, &b).unwrap();
    assert!(aab.is_defined());
    assert!(matches!(massey_triple(&form("ga"), &a, &b), Err(CohomologyError::NotACycle(_))));
}

/// ⟨α,α,β⟩ by brute force: every primitive choice x = 0 + closed, y = −γ + closed
/// gives x∧β + α∧y; the class is trivial iff some choice is exact.
#[test]
fn massey_aab_against_brute_force() {
    let outcome = massey_triple(&form("al"), &form("al"), &form("be")).unwrap();
    let MasseyOutcome::Defined(m) = outcome else { panic!() };
    let h2 = BigradedComplex::standard().de_rham(2);
    let closed = ["al", "be", "al~", "be~"].map(form);
    let mut found_exact = false;
    // coefficients in {−1, 0, 1} for each closed 1-form added to x and y
    let choices = [-1i64, 0, 1];
    for code in 0..3usize.pow(8) {
        let mut cx = F::zero();
        let mut cy = F::zero();
        let mut k = code;
        for h in &closed {
            let c1 = choices[k % 3];
            k /= 3;
            let c2 = choices[k % 3];
            k /= 3;
            cx = cx + h.scale(&GScalar::from_int(c1));
            cy = cy + h.scale(&GScalar::from_int(c2));
        }
        let x = cx;
        let y = form("-1*ga") + cy;
        let rep = x.wedge(&form("be")) + form("al").wedge(&y);
        if h2.is_boundary(&rep) {
            found_exact = true;
            break;
        }
    }
    assert_eq!(m.trivial, found_exact);
}

#[test]
fn bott_chern_to_dolbeault_ranks_are_consistent() {
    let c = BigradedComplex::standard();
    for p in 0..4 {
        for q in 0..4 {
            let bc = c.bott_chern(p, q);
            let r = natural_map_rank(&bc, &c.dolbeault(p, q)).unwrap();
            assert!(r <= bc.dimension().min(c.dolbeault(p, q).dimension()));
        }
    }
}
