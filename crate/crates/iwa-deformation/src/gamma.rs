use iwa_exterior::mask::{self, Mask};
use iwa_exterior::Form;
use iwa_scalars::{Coeff, GScalar, MultiPoly, ParamVar};

use crate::{poly_covectors, ComplexStructure, DeformationError, Sigma};

const AL: usize = 0;
const BE: usize = 1;
const GA: usize = 2;
const ALB: usize = 3;
const BEB: usize = 4;
const GAB: usize = 5;

fn w<C: Coeff>(covs: &[Form<C>; 6], idx: [usize; 3]) -> Form<C> {
    Form::wedge_all(&idx.map(|k| covs[k].clone()))
}

/// Γ₁..Γ₄ from the frame covectors and σ's:
///
/// Γ₁ = α_tγ_tᾱ_t − (σ22̄/σ̄12) α_tβ_tγ̄_t,  Γ₂ = α_tγ_tβ̄_t + (σ21̄/σ̄12) α_tβ_tγ̄_t,
/// Γ₃ = β_tγ_tᾱ_t + (σ12̄/σ̄12) α_tβ_tγ̄_t,  Γ₄ = β_tγ_tβ̄_t − (σ11̄/σ̄12) α_tβ_tγ̄_t.
///
/// The signs of Γ₂ and Γ₃ are the ones that make all four d-closed.
pub fn gamma_forms_from<C: Coeff>(
    covs: &[Form<C>; 6],
    sigma: &Sigma<C>,
) -> Result<[Form<C>; 4], DeformationError> {
    let inv = sigma
        .sigma12
        .conj()
        .try_inv()
        .ok_or_else(|| DeformationError::Pole("conj(σ12) = 0".into()))?;
    let abgb = w(covs, [AL, BE, GAB]);
    let corr = |c: &C, sign: i64| abgb.scale(&(c.clone() * inv.clone() * C::from_int(sign)));
    Ok([
        w(covs, [AL, GA, ALB]) + corr(&sigma.sigma22b, -1),
        w(covs, [AL, GA, BEB]) + corr(&sigma.sigma21b, 1),
        w(covs, [BE, GA, ALB]) + corr(&sigma.sigma12b, 1),
        w(covs, [BE, GA, BEB]) + corr(&sigma.sigma11b, -1),
    ])
}

pub fn gamma_forms(j: &ComplexStructure) -> Result<[Form<GScalar>; 4], DeformationError> {
    gamma_forms_from(&j.covectors(), &j.sigma()?)
}

/// A 3-form whose coefficients are A + r·B with r = σ22̄/σ̄12 kept formal.
#[derive(Clone, Debug, PartialEq)]
pub struct FormalExpansion {
    pub constant: Form<MultiPoly>,
    pub r_part: Form<MultiPoly>,
}

impl FormalExpansion {
    pub fn restrict_essential(&self) -> Self {
        let f = |u: &Form<MultiPoly>| u.map(drop_t3);
        FormalExpansion {
            constant: f(&self.constant),
            r_part: f(&self.r_part),
        }
    }

    /// Monomials where the two expansions disagree, with the differences
    /// (this − other) of the constant and r parts.
    pub fn mismatches(&self, other: &Self) -> Vec<(Mask, MultiPoly, MultiPoly)> {
        let da = &self.constant - &other.constant;
        let db = &self.r_part - &other.r_part;
        let mut masks: Vec<Mask> = da.terms().chain(db.terms()).map(|(m, _)| m).collect();
        masks.sort_unstable();
        masks.dedup();
        masks
            .into_iter()
            .map(|m| (m, da.coeff(m), db.coeff(m)))
            .collect()
    }
}

/// Sets t31 = t32 = 0 and their conjugates.
fn drop_t3(p: &MultiPoly) -> MultiPoly {
    let slots = [ParamVar::T31, ParamVar::T32, ParamVar::S31, ParamVar::S32].map(|v| v.index());
    MultiPoly::from_terms(
        p.terms()
            .filter(|(e, _)| slots.iter().all(|&k| e[k] == 0))
            .map(|(e, c)| (*e, c.clone())),
    )
}

/// Γ₁(t) = α_tγ_tᾱ_t − r α_tβ_tγ̄_t expanded in the fixed basis.
pub fn gamma1_formal() -> FormalExpansion {
    let covs = poly_covectors();
    FormalExpansion {
        constant: w(&covs, [AL, GA, ALB]),
        r_part: -w(&covs, [AL, BE, GAB]),
    }
}

fn pt(i: usize, l: usize) -> MultiPoly {
    MultiPoly::t(i, l)
}

fn ps(i: usize, l: usize) -> MultiPoly {
    MultiPoly::s(i, l)
}

fn int(n: i64) -> MultiPoly {
    MultiPoly::constant(GScalar::from_int(n))
}

/// One displayed term: (constant part, r part, factors in displayed order).
type Term = (MultiPoly, MultiPoly, [usize; 3]);

fn displayed_terms(corrected: bool) -> Vec<Term> {
    let d = &pt(1, 1) * &pt(2, 2) - &pt(1, 2) * &pt(2, 1);
    let db = d.conj();
    let t11s11 = &pt(1, 1) * &ps(1, 1);
    let z = MultiPoly::zero;
    // the two coefficients where the typeset signs disagree with the product
    let flip = if corrected { int(-1) } else { int(1) };
    vec![
        (-ps(1, 2), z(), [AL, BE, GA]),
        (-(&d * &pt(1, 2)), -d.clone(), [ALB, BEB, GAB]),
        (-(int(1) - t11s11.clone()), &pt(2, 1) * &db, [AL, ALB, GA]),
        (
            -(&pt(3, 2) * &(int(1) - t11s11.clone()) + &pt(1, 2) * &ps(1, 1) * pt(3, 1)),
            &flip * &(&d * &ps(3, 1)),
            [AL, ALB, BEB],
        ),
        (
            -(&ps(1, 2) * &pt(3, 1)),
            &pt(2, 1) * &ps(3, 2) + &pt(1, 1) * &ps(3, 1),
            [AL, BE, ALB],
        ),
        (-(&(t11s11.clone() - int(1)) * &d), -pt(2, 1), [AL, ALB, GAB]),
        (
            -(&ps(1, 2) * &pt(3, 2)),
            &pt(2, 2) * &ps(3, 2) + &pt(1, 2) * &ps(3, 1),
            [AL, BE, BEB],
        ),
        (&ps(1, 2) * &d, int(-1), [AL, BE, GAB]),
        (-(&pt(1, 1) * &ps(1, 2)), &pt(1, 1) * &db, [ALB, BE, GA]),
        (
            -(&pt(1, 1) * &ps(1, 2) * pt(3, 2) - &pt(1, 2) * &ps(1, 2) * pt(3, 1)),
            &d * &ps(3, 2),
            [ALB, BE, BEB],
        ),
        (&d * &pt(1, 1) * ps(1, 2), -pt(1, 1), [ALB, BE, GAB]),
        (pt(1, 2), &d * &db, [ALB, BEB, GA]),
        (&pt(1, 2) * &ps(1, 1), &pt(2, 2) * &db, [AL, BEB, GA]),
        (z(), db.clone(), [AL, BE, GA]),
        (
            &flip * &(&pt(1, 2) * &ps(1, 1) * d.clone()),
            &flip * &pt(2, 2),
            [AL, BEB, GAB],
        ),
        (&pt(1, 2) * &ps(1, 2), -(&pt(1, 2) * &db), [BE, BEB, GA]),
        (-(&pt(1, 2) * &ps(1, 2) * d.clone()), pt(1, 2), [BE, BEB, GAB]),
    ]
}

fn assemble(terms: Vec<Term>) -> FormalExpansion {
    let mut constant = Form::zero();
    let mut r_part = Form::zero();
    for (a, b, idx) in terms {
        let seq: Vec<usize> = idx.to_vec();
        let m = mask::from_indices(&seq);
        let sign = MultiPoly::constant(GScalar::from_int(mask::sequence_sign(&seq) as i64));
        constant.add_term(m, &a * &sign);
        r_part.add_term(m, &b * &sign);
    }
    FormalExpansion { constant, r_part }
}

/// The seventeen-term expansion of Γ₁(t) exactly as typeset.
pub fn gamma1_printed() -> FormalExpansion {
    assemble(displayed_terms(false))
}

/// The same expansion with the α∧β̄∧γ̄ coefficient and the r D t̄31 term of
/// α∧ᾱ∧β̄ sign-corrected.
pub fn gamma1_corrected() -> FormalExpansion {
    assemble(displayed_terms(true))
}

/// The terms of Γ₁..Γ₄ linear in a single conjugate parameter and free of
/// all other parameters: the isolated t̄ terms.
pub fn isolated_conjugate_terms(u: &Form<MultiPoly>) -> Vec<(Mask, ParamVar, GScalar)> {
    let mut out = Vec::new();
    for (m, c) in u.terms() {
        for (e, coef) in c.terms() {
            if e.iter().sum::<u8>() != 1 {
                continue;
            }
            let k = e.iter().position(|&x| x == 1).expect("degree one");
            let v = ParamVar::from_index(k);
            if !v.is_holomorphic() {
                out.push((m, v, coef.clone()));
            }
        }
    }
    out
}
