use iwa_cohomology::linalg::{self, Vector};
use iwa_cohomology::{BigradedComplex, CohomologySpace};
use iwa_deformation::omega11;
use iwa_exterior::mask::{ALPHA, ALPHA_BAR, BETA, BETA_BAR, GAMMA, GAMMA_BAR};
use iwa_exterior::Form;
use iwa_hodge::{HodgeError, Metric, Op};
use iwa_deformation::ComplexStructure;
use iwa_scalars::{GScalar, Matrix, ParamPoint};
use serde::Serialize;

use crate::pairing::ordered;
use crate::MirrorError;

fn i2(a: u8, b: u8) -> Form<GScalar> {
    Form::monomial(a, GScalar::i()).wedge(&Form::monomial(b, GScalar::one()))
}

/// [iαᾱ∧iγγ̄], [iββ̄∧iγγ̄], [iαβ̄∧iγγ̄], [iβᾱ∧iγγ̄] at t = 0.
pub fn basis22() -> [Form<GScalar>; 4] {
    let g = i2(GAMMA, GAMMA_BAR);
    [
        i2(ALPHA, ALPHA_BAR).wedge(&g),
        i2(BETA, BETA_BAR).wedge(&g),
        i2(ALPHA, BETA_BAR).wedge(&g),
        i2(BETA, ALPHA_BAR).wedge(&g),
    ]
}

pub const BASIS22_LABELS: [&str; 4] = ["ia.al~ ^ ig.ga~", "ib.be~ ^ ig.ga~", "ia.be~ ^ ig.ga~", "ib.al~ ^ ig.ga~"];

/// Coordinates of an Aeppli cycle against a list of class representatives.
pub fn coords_in_basis(
    space: &CohomologySpace,
    basis: &[Form<GScalar>],
    u: &Form<GScalar>,
) -> Result<Vector, MirrorError> {
    let mut gens: Vec<Vector> = basis.iter().map(|b| space.vector_of(b)).collect::<Result<_, _>>()?;
    let k = gens.len();
    for b in space.boundary_basis() {
        gens.push(space.vector_of(&b)?);
    }
    let v = space.vector_of(u)?;
    let c = linalg::express(&gens, &v)
        .ok_or_else(|| MirrorError::DegreeMismatch(format!("not in the span of the given {} classes", space.kind())))?;
    Ok(c[..k].to_vec())
}

pub fn aeppli22_at0() -> CohomologySpace {
    BigradedComplex::standard().aeppli(2, 2)
}

/// An element of H^{2,2}_A(X₀) in [`basis22`] coordinates.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MirrorImage {
    pub coeffs: [GScalar; 4],
    pub marked: bool,
}

impl MirrorImage {
    fn new(coeffs: [GScalar; 4]) -> Self {
        let marked = coeffs == omega0_sq_coords();
        MirrorImage { coeffs, marked }
    }

    /// (M + conj M)/2; conjugation swaps the last two basis classes.
    pub fn real_part(&self) -> [GScalar; 4] {
        let c = &self.coeffs;
        let half = GScalar::from_ratio(1, 2);
        [
            GScalar::from_rational(c[0].re().clone()),
            GScalar::from_rational(c[1].re().clone()),
            (&c[2] + &c[3].conj()) * &half,
            (&c[3] + &c[2].conj()) * &half,
        ]
    }
}

/// [ω₀²]_A = 2[iαᾱ iγγ̄] + 2[iββ̄ iγγ̄].
pub fn omega0_sq_coords() -> [GScalar; 4] {
    [GScalar::from_int(2), GScalar::from_int(2), GScalar::zero(), GScalar::zero()]
}

fn essential_positive(t: &ParamPoint) -> Result<(), MirrorError> {
    if !t.is_essential() {
        return Err(MirrorError::OffSlice);
    }
    match Metric::omega11(t) {
        Ok(_) => Ok(()),
        Err(HodgeError::NotPositive(k)) => Err(MirrorError::NotPositive(format!(
            "ω_t^{{1,1}} fails positivity at pivot {k} for t = {t}"
        ))),
        Err(e) => Err(e.into()),
    }
}

/// M(t) = [(ω_t^{1,1})²]_A by direct expansion.
pub fn mirror_map_positive(t: &ParamPoint) -> Result<MirrorImage, MirrorError> {
    essential_positive(t)?;
    let w = omega11(t);
    let c = coords_in_basis(&aeppli22_at0(), &basis22(), &w.wedge(&w))?;
    Ok(MirrorImage::new(c.try_into().expect("four coordinates")))
}

/// 2(1−|t11|²−|t21|²)(1−|D|²), 2(1−|t12|²−|t22|²)(1−|D|²),
/// −2(t12 t̄11 + t22 t̄21)(1−|D|²), −2(t11 t̄12 + t21 t̄22)(1−|D|²).
pub fn positive_formula(t: &ParamPoint) -> [GScalar; 4] {
    let n = |i: usize, l: usize| GScalar::from_rational(t.t(i, l).norm_sqr());
    let one = GScalar::one();
    let two = GScalar::from_int(2);
    let k = &two * &(&one - &GScalar::from_rational(t.d().norm_sqr()));
    let (t11, t12, t21, t22) = (t.t(1, 1), t.t(1, 2), t.t(2, 1), t.t(2, 2));
    [
        (&one - &n(1, 1) - n(2, 1)) * &k,
        (&one - &n(1, 2) - n(2, 2)) * &k,
        -(t12 * &t11.conj() + t22 * &t21.conj()) * &k,
        -(t11 * &t12.conj() + t21 * &t22.conj()) * &k,
    ]
}

/// M̃(t) = [ω₀²]_A − t11[iβᾱ iγγ̄] + t22[iαβ̄ iγγ̄] − t12[iββ̄ iγγ̄] + t21[iαᾱ iγγ̄].
pub fn mirror_map_complexified(t: &ParamPoint) -> Result<MirrorImage, MirrorError> {
    if !t.is_essential() {
        return Err(MirrorError::OffSlice);
    }
    let b = omega0_sq_coords();
    Ok(MirrorImage::new([
        &b[0] + t.t(2, 1),
        &b[1] - t.t(1, 2),
        &b[2] + t.t(2, 2),
        &b[3] - t.t(1, 1),
    ]))
}

/// Columns ∂M̃/∂t11, ∂t12, ∂t21, ∂t22, read off from M̃ itself.
pub fn complexified_differential() -> Result<Matrix<GScalar>, MirrorError> {
    let base = mirror_map_complexified(&ParamPoint::zero())?.coeffs;
    let cols: Vec<Vector> = crate::coords::ESSENTIAL_VARS
        .iter()
        .map(|&v| {
            let img = mirror_map_complexified(&ParamPoint::zero().with(v, GScalar::one()))?.coeffs;
            Ok(img.iter().zip(&base).map(|(a, b)| a - b).collect())
        })
        .collect::<Result<_, MirrorError>>()?;
    Ok(Matrix::from_cols(4, &cols))
}

/// ∂/∂t11 ↦ −[βγᾱ], ∂/∂t12 ↦ −[βγβ̄], ∂/∂t21 ↦ [αγᾱ], ∂/∂t22 ↦ [αγβ̄].
pub fn tangent_images() -> [Form<GScalar>; 4] {
    [
        -ordered(&[1, 2, 3]),
        -ordered(&[1, 2, 4]),
        ordered(&[0, 2, 3]),
        ordered(&[0, 2, 4]),
    ]
}

/// A₀ applied to the tangent images: columns [Γ∧γ̄]_A.
pub fn a0_on_tangents() -> Result<Matrix<GScalar>, MirrorError> {
    let space = aeppli22_at0();
    let gb = Form::monomial(GAMMA_BAR, GScalar::one());
    let cols: Vec<Vector> = tangent_images()
        .iter()
        .map(|g| coords_in_basis(&space, &basis22(), &g.wedge(&gb)))
        .collect::<Result<_, _>>()?;
    Ok(Matrix::from_cols(4, &cols))
}

/// A Gauduchon metric ω = ρ + iγγ̄ with [ω²]_A equal to the real part of the
/// image, where ρ = ½(a iαᾱ + b iββ̄ + c iαβ̄ + c̄ iβᾱ); `None` if ρ is not
/// positive.
pub fn gauduchon_witness(image: &MirrorImage) -> Result<Option<Metric>, MirrorError> {
    let [a, b, c, _] = image.real_part();
    let half = GScalar::from_ratio(1, 2);
    let rho = (i2(ALPHA, ALPHA_BAR).scale(&a)
        + i2(BETA, BETA_BAR).scale(&b)
        + i2(ALPHA, BETA_BAR).scale(&c)
        + i2(BETA, ALPHA_BAR).scale(&c.conj()))
    .scale(&half);
    let omega = rho + i2(GAMMA, GAMMA_BAR);
    let m = match Metric::from_form(ComplexStructure::standard(), &omega) {
        Ok(m) => m,
        Err(HodgeError::NotPositive(_)) => return Ok(None),
        Err(e) => return Err(e.into()),
    };
    let sq = omega.wedge(&omega);
    if !m.apply(Op::DelDelBar, &sq).is_zero() {
        return Ok(None);
    }
    let got = coords_in_basis(&aeppli22_at0(), &basis22(), &sq)?;
    debug_assert_eq!(got, image.real_part().to_vec());
    Ok((got == image.real_part().to_vec()).then_some(m))
}

/// [iα∧ᾱ∧iβ∧β̄]_A.
pub fn discarded_term_class() -> Result<Vector, MirrorError> {
    let u = i2(ALPHA, ALPHA_BAR).wedge(&i2(BETA, BETA_BAR));
    coords_in_basis(&aeppli22_at0(), &basis22(), &u)
}
