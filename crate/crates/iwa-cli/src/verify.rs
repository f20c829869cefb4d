use iwa_cohomology::{massey_triple, BigradedComplex, CohomologyNumbers, MasseyOutcome};
use iwa_deformation::{
    appendix_functions, build_structure, gamma1_corrected, gamma1_formal, gamma1_printed, jet_frame,
    nakamura_class, sigma_appendix, sigma_from_frame, CVariant, ComplexStructure, NakamuraClass, SIGMA_NAMES,
};
use iwa_exterior::{mask, render_form, Form};
use iwa_hodge::{aeppli22_generators, aeppli_projection, gauduchon_lift, metric_predicates, LaplacianKind, Metric, Op, Support};
use iwa_mirror::{
    a0_on_tangents, complexified_differential, coordinates_z, lift_i, mirror_map_complexified, mirror_map_positive,
    named_pairing, omega0_sq_coords, positive_formula, potential_symmetry_check, render_signs, vhs_checks,
    yukawa_cross_check, z_closed_forms, NamedSpace, SymplecticBasis,
};
use iwa_scalars::{sample_points, GScalar, ParamPoint, ParamVar, SampleSpec};
use rayon::prelude::*;
use serde::Serialize;

use crate::CliError;

pub struct Ctx {
    pub seed: u64,
}

impl Ctx {
    fn samples(&self, salt: u64, count: usize, essential: bool) -> Vec<ParamPoint> {
        sample_points(&SampleSpec {
            seed: self.seed.wrapping_mul(1_000_003).wrapping_add(salt),
            count,
            max_den: 8,
            essential,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubCheck {
    pub name: String,
    pub pass: bool,
    pub witness: String,
}

#[derive(Default)]
struct Checks(Vec<SubCheck>);

impl Checks {
    fn add(&mut self, name: impl Into<String>, pass: bool, witness: impl Into<String>) {
        self.0.push(SubCheck {
            name: name.into(),
            pass,
            witness: witness.into(),
        });
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, name: impl Into<String>, got: T, want: T) {
        let pass = got == want;
        self.add(name, pass, format!("got {got:?}, expected {want:?}"));
    }
}

type Run = fn(&Ctx) -> Result<Vec<SubCheck>, CliError>;

pub struct Criterion {
    pub id: u8,
    pub title: &'static str,
    run: Run,
}

pub const REGISTRY: &[Criterion] = &[
    Criterion { id: 1, title: "cohomology tables at t = 0", run: c1 },
    Criterion { id: 2, title: "class (iii) Hodge numbers", run: c2 },
    Criterion { id: 3, title: "Frolicher spectral sequence", run: c3 },
    Criterion { id: 4, title: "Hodge star identities", run: c4 },
    Criterion { id: 5, title: "intersection-form signatures", run: c5 },
    Criterion { id: 6, title: "Gauduchon family", run: c6 },
    Criterion { id: 7, title: "canonical coordinates z", run: c7 },
    Criterion { id: 8, title: "mirror map", run: c8 },
    Criterion { id: 9, title: "Gamma_1 expansion and sigma closed forms", run: c9 },
    Criterion { id: 10, title: "sGG lift", run: c10 },
    Criterion { id: 11, title: "VHS report", run: c11 },
    Criterion { id: 12, title: "Massey product <al,be,be>", run: c12 },
    Criterion { id: 13, title: "property suites", run: c13 },
];

/// Criteria that cannot pass for a correct implementation, with the reason.
pub const KNOWN_UNATTAINABLE: &[(u8, &str)] = &[(
    9,
    "the printed Gamma_1 expansion has one wrong sign, the printed c(t) has a conjugation slip, \
     and the sigma_{ij~} have nonzero holomorphic first partials at 0",
)];

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub title: String,
    pub pass: bool,
    pub checks: Vec<SubCheck>,
}

impl CriterionResult {
    pub fn first_failure(&self) -> Option<&SubCheck> {
        self.checks.iter().find(|c| !c.pass)
    }

    pub fn line(&self) -> String {
        let passed = self.checks.iter().filter(|c| c.pass).count();
        let mut s = format!(
            "criterion {:>2}  {}  {} ({}/{} checks)",
            self.id,
            if self.pass { "PASS" } else { "FAIL" },
            self.title,
            passed,
            self.checks.len()
        );
        if let Some(f) = self.first_failure() {
            s.push_str(&format!("; first failure: {}: {}", f.name, f.witness));
        }
        s
    }
}

pub fn run_criterion(c: &Criterion, ctx: &Ctx) -> CriterionResult {
    let checks = match (c.run)(ctx) {
        Ok(v) => v,
        Err(e) => vec![SubCheck {
            name: "evaluation".into(),
            pass: false,
            witness: e.to_string(),
        }],
    };
    CriterionResult {
        id: c.id,
        title: c.title.to_string(),
        pass: !checks.is_empty() && checks.iter().all(|x| x.pass),
        checks,
    }
}

/// Runs the selected criteria (all if `only` is empty) in parallel; results
/// come back in registry order.
pub fn verify(ctx: &Ctx, only: &[u8]) -> Result<Vec<CriterionResult>, CliError> {
    if let Some(bad) = only.iter().find(|id| !REGISTRY.iter().any(|c| c.id == **id)) {
        return Err(CliError::Usage(format!("no acceptance criterion {bad}")));
    }
    let chosen: Vec<&Criterion> = REGISTRY.iter().filter(|c| only.is_empty() || only.contains(&c.id)).collect();
    Ok(chosen.par_iter().map(|c| run_criterion(c, ctx)).collect())
}

fn numbers_at(t: &ParamPoint) -> Result<CohomologyNumbers, CliError> {
    Ok(CohomologyNumbers::compute(&BigradedComplex::new(&build_structure(t)?))?)
}

fn c1(_: &Ctx) -> Result<Vec<SubCheck>, CliError> {
    let c = BigradedComplex::standard();
    let n = CohomologyNumbers::compute(&c)?;
    let mut k = Checks::default();
    for (p, q, want) in [(1, 0, 3), (0, 1, 2), (1, 1, 6), (2, 1, 6), (1, 2, 6), (3, 0, 1), (0, 3, 1)] {
        k.eq(format!("h^{{{p},{q}}}"), n.dolbeault[p][q], want);
    }
    for (d, want) in [(1, 4), (2, 8), (3, 10), (4, 8), (5, 4)] {
        k.eq(format!("b{d}"), n.betti[d], want);
    }
    k.eq("dim H^{2,2}_A", n.aeppli[2][2], 4);
    k.eq("dim H^{1,1}_BC", n.bott_chern[1][1], 4);
    Ok(k.0)
}

fn class_three_point(ctx: &Ctx) -> ParamPoint {
    ctx.samples(2, 16, true)
        .into_iter()
        .find(|p| nakamura_class(p) == NakamuraClass::ClassIII)
        .unwrap_or_else(|| {
            ParamPoint::zero()
                .with(ParamVar::T11, GScalar::from_ratio(1, 3))
                .with(ParamVar::T22, GScalar::from_ratio(1, 4))
        })
}

/// t22 := t12 t21 / t11 puts a sample on D = 0.
fn class_two_points(ctx: &Ctx, salt: u64, count: usize) -> Vec<ParamPoint> {
    ctx.samples(salt, 4 * count, true)
        .into_iter()
        .filter(|p| !p.t(1, 1).is_zero() && !(p.t(1, 2).is_zero() && p.t(2, 1).is_zero()))
        .map(|p| {
            let t22 = p.t(1, 2) * p.t(2, 1) * p.t(1, 1).inv().expect("nonzero");
            p.with(ParamVar::T22, t22)
        })
        .take(count)
        .collect()
}

fn c2(ctx: &Ctx) -> Result<Vec<SubCheck>, CliError> {
    let t = class_three_point(ctx);
    let n = numbers_at(&t)?;
    let mut k = Checks::default();
    k.eq(format!("class at {t}"), nakamura_class(&t), NakamuraClass::ClassIII);
    for (p, q, want) in [(2, 0, 1), (1, 1, 5), (0, 2, 2), (2, 1, 4)] {
        k.eq(format!("h^{{{p},{q}}} at {t}"), n.dolbeault[p][q], want);
    }
    Ok(k.0)
}

fn c3(ctx: &Ctx) -> Result<Vec<SubCheck>, CliError> {
    let mut pts = vec![ParamPoint::zero()];
    pts.extend(class_two_points(ctx, 3, 2));
    pts.push(class_three_point(ctx));
    pts.extend(ctx.samples(4, 2, false));
    let nums = pts.par_iter().map(numbers_at).collect::<Result<Vec<_>, _>>()?;
    let mut k = Checks::default();
    for (t, n) in pts.iter().zip(&nums) {
        k.eq(format!("dim E2^{{2,1}} at {t} (class {})", nakamura_class(t)), n.e2[2][1], 4);
        k.add(format!("E2 = E3 at {t}"), n.e2 == n.e3, format!("E2 {:?} vs E3 {:?}", n.e2, n.e3));
        let sums: Vec<usize> = (0..7).map(|d| CohomologyNumbers::diagonal_sum(&n.e2, d)).collect();
        k.eq(format!("sum E2 = b_k at {t}"), sums, n.betti.to_vec());
    }
    Ok(k.0)
}

fn wedge_of(c: &[Form<GScalar>; 6], idx: &[usize]) -> Form<GScalar> {
    Form::wedge_all(&idx.iter().map(|&k| c[k].clone()).collect::<Vec<_>>())
}

fn c4(ctx: &Ctx) -> Result<Vec<SubCheck>, CliError> {
    let mut k = Checks::default();
    let i = GScalar::i();
    let mi = -GScalar::i();
    // (u, ⋆u / c, c) as coframe index lists
    let cases: [(&[usize], &[usize], &GScalar); 6] = [
        (&[0, 2, 3], &[1, 2, 4], &mi),
        (&[1, 2, 4], &[0, 2, 3], &mi),
        (&[0, 2, 4], &[0, 2, 4], &i),
        (&[1, 2, 3], &[1, 2, 3], &i),
        (&[0, 1, 2], &[0, 1, 2], &mi),
        (&[0, 1, 5], &[0, 1, 5], &i),
    ];
    let mut structures = vec![ComplexStructure::standard()];
    for t in ctx.samples(5, 2, true) {
        structures.push(build_structure(&t)?);
    }
    for j in structures {
        let t = j.t().clone();
        let m = Metric::canonical(j.clone());
        let c = j.covectors();
        for (u, v, s) in cases {
            let (u, v) = (wedge_of(&c, u), wedge_of(&c, v));
            let got = m.star(&u);
            k.add(
                format!("star({}) at {t}", render_form(&u)),
                got == v.scale(s),
                format!("got {}", render_form(&got)),
            );
        }
        let a = wedge_of(&c, &[0, 2, 3]);
        let b = wedge_of(&c, &[1, 2, 4]);
        let plus = a.clone() + b.clone();
        let minus = a - b;
        k.add(format!("star(sum) = -i sum at {t}"), m.star(&plus) == plus.scale(&mi), render_form(&m.star(&plus)));
        k.add(format!("star(diff) = i diff at {t}"), m.star(&minus) == minus.scale(&i), render_form(&m.star(&minus)));
        let bad: Vec<String> = mask::of_degree(3)
            .into_iter()
            .map(|msk| Form::monomial(msk, GScalar::one()))
            .filter(|u| m.star(&m.star(u)) != -u.clone())
            .map(|u| render_form(&u))
            .collect();
        k.add(format!("star^2 = -1 on 3-forms at {t}"), bad.is_empty(), bad.join(", "));
    }
    Ok(k.0)
}

fn c5(_: &Ctx) -> Result<Vec<SubCheck>, CliError> {
    let mut k = Checks::default();
    for (space, want) in [
        (NamedSpace::H21Gamma, "(-,+,+,+)"),
        (NamedSpace::F2, "(-,-,+,+,+)"),
        (NamedSpace::F1B, "(+,+,-,-,-)"),
    ] {
        let m = named_pairing(space)?;
        let got = m.signature().map(|s| render_signs(&s)).unwrap_or_else(|| "not Hermitian".into());
        k.eq(format!("signature on {space}"), got.as_str(), want);
    }
    Ok(k.0)
}

fn c6(ctx: &Ctx) -> Result<Vec<SubCheck>, CliError> {
    let pts = ctx.samples(6, 20, true);
    let rows: Vec<Result<(ParamPoint, bool, bool, Option<String>), CliError>> = pts
        .par_iter()
        .map(|t| {
            let g = metric_predicates(&Metric::canonical(build_structure(t)?));
            let w = Metric::omega11(t)?;
            let p = metric_predicates(&w);
            Ok((t.clone(), g.gauduchon.holds, p.positive && p.gauduchon.holds, g.gauduchon.witness.or(p.gauduchon.witness)))
        })
        .collect();
    let mut k = Checks::default();
    for r in rows {
        let (t, a, b, w) = r?;
        let w = w.unwrap_or_default();
        k.add(format!("ddbar_t omega_t^2 = 0 at {t}"), a, w.clone());
        k.add(format!("omega_t^(1,1) positive, ddbar (omega_t^(1,1))^2 = 0 at {t}"), b, w);
    }
    Ok(k.0)
}

fn c7(ctx: &Ctx) -> Result<Vec<SubCheck>, CliError> {
    let b = SymplecticBasis::standard();
    let mut k = Checks::default();
    let z0 = coordinates_z(&ParamPoint::zero(), &b)?;
    k.eq("z(0)", z0.to_vec(), vec![GScalar::one(), GScalar::zero(), GScalar::zero(), GScalar::zero()]);
    for t in ctx.samples(7, 20, true) {
        k.eq(format!("z at {t}"), coordinates_z(&t, &b)?, z_closed_forms(&t)?);
    }
    Ok(k.0)
}

fn c8(ctx: &Ctx) -> Result<Vec<SubCheck>, CliError> {
    let mut k = Checks::default();
    for t in ctx.samples(8, 20, true) {
        k.eq(format!("[(omega^(1,1))^2]_A at {t}"), mirror_map_positive(&t)?.coeffs, positive_formula(&t));
    }
    let m0 = mirror_map_complexified(&ParamPoint::zero())?;
    k.eq("complexified map at 0", m0.coeffs.clone(), omega0_sq_coords());
    k.add("marked at 0", m0.marked, "");
    let d = complexified_differential()?;
    let a0 = a0_on_tangents()?;
    k.add("dM~_0 = A_0", d == a0, format!("{d:?} vs {a0:?}"));
    Ok(k.0)
}

fn c9(ctx: &Ctx) -> Result<Vec<SubCheck>, CliError> {
    let mut k = Checks::default();
    let computed = gamma1_formal();
    let diff = computed.restrict_essential().mismatches(&gamma1_printed().restrict_essential());
    let witness: Vec<String> = diff
        .iter()
        .map(|(m, a, b)| format!("{}: computed - printed = {a} + ({b}) r", render_form(&Form::monomial(*m, GScalar::one()))))
        .collect();
    k.add("Gamma_1 equals the printed expansion term by term", diff.is_empty(), witness.join("; "));
    k.add(
        "Gamma_1 equals the sign-corrected expansion term by term",
        gamma1_corrected() == computed,
        "",
    );

    let pts = class_two_points(ctx, 9, 10);
    for (variant, label) in [(CVariant::Corrected, "corrected c(t)"), (CVariant::Printed, "printed c(t)")] {
        let mut bad = None;
        for t in &pts {
            let frame = build_structure(t)?.sigma()?;
            match sigma_appendix(t, variant) {
                Ok(s) if s == frame => {}
                Ok(s) => {
                    bad = Some(format!("at {t}: closed form {:?} vs frame {:?}", s.to_array(), frame.to_array()));
                    break;
                }
                Err(e) => {
                    bad = Some(format!("at {t}: {e}"));
                    break;
                }
            }
        }
        k.add(
            format!("sigma closed forms ({label}) match the frame at {} class (ii) points", pts.len()),
            bad.is_none(),
            bad.unwrap_or_default(),
        );
    }

    let jets = sigma_from_frame(&jet_frame(&ParamPoint::zero())?)?.to_array();
    let f = appendix_functions(CVariant::Corrected);
    let z = ParamPoint::zero();
    let appendix = f.sigma.to_array().iter().map(|r| r.jet_lift(&z)).collect::<Result<Vec<_>, _>>()?;
    let mut anti = Vec::new();
    let mut holo = Vec::new();
    for (n, (a, b)) in jets.iter().zip(&appendix).enumerate() {
        for v in ParamVar::ALL {
            for (src, jet) in [("frame", a), ("closed form", b)] {
                let d = jet.partial(v);
                if !d.is_zero() {
                    let w = format!("d {}/d {} = {d} ({src})", SIGMA_NAMES[n], v.name());
                    if v.is_holomorphic() { holo.push(w) } else { anti.push(w) }
                }
            }
        }
    }
    k.add("anti-holomorphic first partials of sigma vanish at 0", anti.is_empty(), anti.join("; "));
    let all_zero = anti.is_empty() && holo.is_empty();
    k.add("all 12 first partials of every sigma vanish at 0", all_zero, holo.join("; "));
    Ok(k.0)
}

fn c10(ctx: &Ctx) -> Result<Vec<SubCheck>, CliError> {
    let mut k = Checks::default();
    let m0 = Metric::standard();
    for u in aeppli22_generators(&m0) {
        let lift = gauduchon_lift(&m0, &u)?;
        k.add(
            format!("Q_omega0 = I_0 on {}", render_form(&u)),
            lift.omega == u,
            render_form(&lift.omega),
        );
    }
    for t in ctx.samples(10, 3, true) {
        let m = Metric::canonical(build_structure(&t)?);
        let ae = BigradedComplex::new(m.structure()).aeppli(2, 2);
        for u in aeppli22_generators(&m) {
            let lift = gauduchon_lift(&m, &u)?;
            let closed = lift.omega.d();
            k.add(format!("d Omega = 0 at {t}"), closed.is_zero(), render_form(&closed));
            let back = aeppli_projection(&m, &lift.omega);
            k.eq(format!("P_t Q_t = id at {t}"), ae.class_coords(&back)?, ae.class_coords(&u)?);
        }
        k.eq(format!("rank of the lift at {t}"), lift_i(&t)?.rank, 4);
    }
    Ok(k.0)
}

fn c11(_: &Ctx) -> Result<Vec<SubCheck>, CliError> {
    let r = vhs_checks()?;
    let mut k = Checks::default();
    for v in r.verdicts() {
        k.add(v.name.clone(), v.holds, v.witnesses.join("; "));
    }
    Ok(k.0)
}

fn c12(_: &Ctx) -> Result<Vec<SubCheck>, CliError> {
    let al = Form::monomial(mask::ALPHA, GScalar::one());
    let be = Form::monomial(mask::BETA, GScalar::one());
    let mut k = Checks::default();
    match massey_triple(&al, &be, &be)? {
        MasseyOutcome::Defined(m) => k.add(
            "<al,be,be> nonzero modulo indeterminacy",
            !m.trivial,
            format!("representative {}", render_form(&m.representative)),
        ),
        MasseyOutcome::NotDefined => k.add("<al,be,be> defined", false, "a.b or b.b is not exact"),
    }
    Ok(k.0)
}

fn degree_forms(d: usize) -> Vec<Form<GScalar>> {
    mask::of_degree(d).into_iter().map(|m| Form::monomial(m, GScalar::one())).collect()
}

fn c13(ctx: &Ctx) -> Result<Vec<SubCheck>, CliError> {
    let mut k = Checks::default();
    let bad: Vec<String> = (0u8..64)
        .map(|m| Form::monomial(m, GScalar::one()))
        .filter(|u| !u.d().d().is_zero())
        .map(|u| render_form(&u))
        .collect();
    k.add("d^2 = 0 on all 64 monomials", bad.is_empty(), bad.join(", "));

    let mut metrics = vec![Metric::standard()];
    for t in ctx.samples(13, 1, true) {
        metrics.push(Metric::canonical(build_structure(&t)?));
    }
    for m in &metrics {
        let t = m.structure().t().clone();
        let mut failures = Vec::new();
        for (op, shift) in [(Op::D, 1), (Op::Del, 1), (Op::DelBar, 1), (Op::DelDelBar, 2)] {
            for d in 0..=6 - shift {
                let src = degree_forms(d);
                let dst = degree_forms(d + shift);
                let images: Vec<_> = src.iter().map(|u| m.apply(op, u)).collect();
                let adj: Vec<_> = dst.iter().map(|v| m.adjoint(op, v)).collect();
                for (u, au) in src.iter().zip(&images) {
                    for (v, av) in dst.iter().zip(&adj) {
                        if m.inner(au, v) != m.inner(u, av) {
                            failures.push(format!("{op:?}: <{}, {}>", render_form(u), render_form(v)));
                        }
                    }
                }
            }
        }
        k.add(format!("adjointness on all basis pairs at {t}"), failures.is_empty(), failures.join("; "));

        let c = BigradedComplex::new(m.structure());
        let mut dims = Vec::new();
        for p in 0..4 {
            for q in 0..4 {
                let s = Support::Bidegree(p, q);
                for (kind, space) in [
                    (LaplacianKind::DelBar, c.dolbeault(p, q)),
                    (LaplacianKind::Aeppli, c.aeppli(p, q)),
                    (LaplacianKind::BottChern, c.bott_chern(p, q)),
                ] {
                    let h = m.harmonic(kind, s).len();
                    if h != space.dimension() {
                        dims.push(format!("{kind:?}({p},{q}): {h} harmonic vs {}", space.dimension()));
                    }
                }
            }
        }
        for d in 0..=6 {
            let h = m.harmonic(LaplacianKind::DeRham, Support::Degree(d)).len();
            if h != c.de_rham(d).dimension() {
                dims.push(format!("de Rham {d}: {h} vs {}", c.de_rham(d).dimension()));
            }
        }
        k.add(format!("Hodge isomorphism dimensions at {t}"), dims.is_empty(), dims.join("; "));
    }

    let basis = SymplecticBasis::standard();
    let mut pts = vec![ParamPoint::zero()];
    pts.extend(ctx.samples(14, 5, true));
    for t in pts {
        let r = potential_symmetry_check(&t, &basis)?;
        k.add(format!("d Psi / dz symmetric at {t}"), r.is_symmetric(), format!("max |asymmetry|^2 = {}", r.max_asymmetry_sqr()));
    }
    let y = yukawa_cross_check(&basis, &GScalar::from_ratio(1, 64))?;
    k.add(
        "Yukawa cross-oracle within the divided-difference budget",
        y.pass,
        format!("step {}, max |Y - G|^2 = {}, budget {}", y.step, y.max_dev_sqr, y.budget),
    );
    Ok(k.0)
}
