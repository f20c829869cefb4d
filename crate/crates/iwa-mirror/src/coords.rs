use iwa_deformation::{kuranishi_covectors, TangentElement};
use iwa_exterior::mask::{self, ALPHA, ALPHA_BAR, BETA, BETA_BAR, HOL};
use iwa_exterior::{Form, Frame};
use iwa_scalars::{Coeff, GScalar, Jet1, Matrix, ParamPoint, ParamVar};
use num_rational::BigRational;
use serde::Serialize;

use crate::pairing::{q_form, qb_form};
use crate::symplectic::SymplecticBasis;
use crate::MirrorError;

/// Holomorphic coordinates of the essential slice, in chart order.
pub const ESSENTIAL_VARS: [ParamVar; 4] = [ParamVar::T11, ParamVar::T12, ParamVar::T21, ParamVar::T22];

fn ensure_essential(t: &ParamPoint) -> Result<(), MirrorError> {
    if t.is_essential() {
        Ok(())
    } else {
        Err(MirrorError::OffSlice)
    }
}

fn lift<C: Coeff>(u: &Form<GScalar>) -> Form<C> {
    u.map(|c| C::from_scalar(c.clone()))
}

/// u_t = α_t∧β_t∧γ_t from the values of the twelve parameters.
pub fn volume_form_from<C: Coeff>(values: &[C]) -> Form<C> {
    let c = kuranishi_covectors(values);
    Form::wedge_all(&[c[0].clone(), c[1].clone(), c[2].clone()])
}

/// v_t = α_t∧β_t.
pub fn torus_form_from<C: Coeff>(values: &[C]) -> Form<C> {
    let c = kuranishi_covectors(values);
    c[0].wedge(&c[1])
}

fn jet_values(base: &ParamPoint) -> Vec<Jet1> {
    ParamVar::ALL.iter().map(|&v| Jet1::var(base, v)).collect()
}

/// Q(u_t, η₀) in closed form: i(1+D²) + (t21−t12)(1+D).
pub fn normalization_closed_form(t: &ParamPoint) -> GScalar {
    let d = t.d();
    let one = GScalar::one();
    GScalar::i() * (&one + &(&d * &d)) + (t.t(2, 1) - t.t(1, 2)) * (&one + &d)
}

/// z_i = Q(u_t,η_i)/Q(u_t,η₀) for any coefficient ring.
fn z_generic<C: Coeff>(u: &Form<C>, basis: &SymplecticBasis) -> Result<[C; 4], MirrorError> {
    let n = q_form(u, &lift(&basis.eta[0]));
    let inv = n
        .try_inv()
        .ok_or_else(|| MirrorError::NormalizationPole("Q(u_t, η₀) = 0".into()))?;
    Ok(std::array::from_fn(|i| q_form(u, &lift(&basis.eta[i + 1])) * inv.clone()))
}

/// z(t) by direct pairing with the η's.
pub fn coordinates_z(t: &ParamPoint, basis: &SymplecticBasis) -> Result<[GScalar; 4], MirrorError> {
    ensure_essential(t)?;
    z_generic(&volume_form_from(&t.values12()), basis)
}

/// The closed forms
/// z₁ = i(1+D²)/N, z₂ = −(t12+t21)(1+D)/N, z₃ = −i(t11 D + t22)/N,
/// z₄ = −i(t22 D + t11)/N with N = i(1+D²) + (t21−t12)(1+D).
pub fn z_closed_forms(t: &ParamPoint) -> Result<[GScalar; 4], MirrorError> {
    ensure_essential(t)?;
    let n = normalization_closed_form(t);
    let inv = n
        .inv()
        .ok_or_else(|| MirrorError::NormalizationPole("closed-form denominator vanishes".into()))?;
    let d = t.d();
    let one = GScalar::one();
    let i = GScalar::i();
    let (t11, t12, t21, t22) = (t.t(1, 1), t.t(1, 2), t.t(2, 1), t.t(2, 2));
    Ok([
        &i * &(&one + &(&d * &d)) * &inv,
        -((t12 + t21) * (&one + &d)) * &inv,
        -(&i * &(t11 * &d + t22)) * &inv,
        -(&i * &(t22 * &d + t11)) * &inv,
    ])
}

/// First-order jets of z at `base`.
pub fn z_jets(base: &ParamPoint, basis: &SymplecticBasis) -> Result<[Jet1; 4], MirrorError> {
    ensure_essential(base)?;
    z_generic(&volume_form_from(&jet_values(base)), basis)
}

/// ∂z_i/∂t_a over the essential variables.
pub fn z_jacobian(base: &ParamPoint, basis: &SymplecticBasis) -> Result<Matrix<GScalar>, MirrorError> {
    let z = z_jets(base, basis)?;
    Ok(Matrix::from_rows(
        z.iter()
            .map(|zi| ESSENTIAL_VARS.iter().map(|&v| zi.partial(v).clone()).collect())
            .collect(),
    ))
}

/// Ψ_i = Q(u'_t, ν_i) and its z-derivatives.
#[derive(Clone, Debug)]
pub struct SymmetryReport {
    pub point: ParamPoint,
    /// P_ij = ∂Ψ_i/∂z_j.
    pub dpsi_dz: Matrix<GScalar>,
    /// P − Pᵀ.
    pub asymmetry: Matrix<GScalar>,
}

impl SymmetryReport {
    pub fn is_symmetric(&self) -> bool {
        self.asymmetry.is_zero()
    }

    /// max |P_ij − P_ji|² as an exact rational.
    pub fn max_asymmetry_sqr(&self) -> BigRational {
        let mut best = BigRational::from_integer(0.into());
        for i in 0..4 {
            for j in 0..4 {
                let v = self.asymmetry[(i, j)].norm_sqr();
                if v > best {
                    best = v;
                }
            }
        }
        best
    }
}

pub fn potential_symmetry_check(t: &ParamPoint, basis: &SymplecticBasis) -> Result<SymmetryReport, MirrorError> {
    ensure_essential(t)?;
    let u = volume_form_from(&jet_values(t));
    let n = q_form(&u, &lift(&basis.eta[0]));
    let inv = n
        .try_inv()
        .ok_or_else(|| MirrorError::NormalizationPole("Q(u_t, η₀) = 0".into()))?;
    let u1 = u.scale(&inv);
    let jac = z_jacobian(t, basis)?;
    let jinv = jac.inverse().ok_or(MirrorError::JacobianSingular)?;
    let dpsi_dt = Matrix::from_rows(
        (1..5)
            .map(|i| {
                let psi = q_form(&u1, &lift(&basis.nu[i]));
                ESSENTIAL_VARS.iter().map(|&v| psi.partial(v).clone()).collect()
            })
            .collect(),
    );
    let p = &dpsi_dt * &jinv;
    let asym = &p - &p.transpose();
    Ok(SymmetryReport {
        point: t.clone(),
        dpsi_dz: p,
        asymmetry: asym,
    })
}

/// The torus-side classes η_{0,B}..η_{4,B}:
/// η_{0,B} = αβ + i(αᾱ+ββ̄) + ᾱβ̄, η_{1,B} = αβ + ᾱβ̄, η_{2,B} = i(αᾱ−ββ̄),
/// η_{3,B} = αβ̄ + ᾱβ, η_{4,B} = i(αβ̄ − ᾱβ).
pub fn torus_etas() -> [Form<GScalar>; 5] {
    let m = |a: u8, b: u8, c: GScalar| {
        Form::monomial(a, GScalar::one()).wedge(&Form::monomial(b, GScalar::one())).scale(&c)
    };
    let one = GScalar::one;
    let i = GScalar::i;
    let ab = m(ALPHA, BETA, one()) + m(ALPHA_BAR, BETA_BAR, one());
    [
        ab.clone() + m(ALPHA, ALPHA_BAR, i()) + m(BETA, BETA_BAR, i()),
        ab,
        m(ALPHA, ALPHA_BAR, i()) - m(BETA, BETA_BAR, i()),
        m(ALPHA, BETA_BAR, one()) + m(ALPHA_BAR, BETA, one()),
        m(ALPHA, BETA_BAR, i()) - m(ALPHA_BAR, BETA, i()),
    ]
}

fn w_generic<C: Coeff>(v: &Form<C>) -> Result<[C; 4], MirrorError> {
    let etas = torus_etas();
    let inv = qb_form(v, &lift(&etas[0]))
        .try_inv()
        .ok_or_else(|| MirrorError::NormalizationPole("Q_B(v_t, η_{0,B}) = 0".into()))?;
    Ok(std::array::from_fn(|i| qb_form(v, &lift(&etas[i + 1])) * inv.clone()))
}

pub fn coordinates_w(t: &ParamPoint) -> Result<[GScalar; 4], MirrorError> {
    ensure_essential(t)?;
    w_generic(&torus_form_from(&t.values12()))
}

pub fn w_jacobian(base: &ParamPoint) -> Result<Matrix<GScalar>, MirrorError> {
    ensure_essential(base)?;
    let w = w_generic(&torus_form_from(&jet_values(base)))?;
    Ok(Matrix::from_rows(
        w.iter()
            .map(|wi| ESSENTIAL_VARS.iter().map(|&v| wi.partial(v).clone()).collect())
            .collect(),
    ))
}

/// Kodaira–Spencer image of ∂/∂t_{iλ} at 0: ξ_i ⊗ φ̄_λ.
pub fn kodaira_spencer(var: ParamVar) -> TangentElement {
    let k = ESSENTIAL_VARS.iter().position(|&v| v == var).expect("essential variable");
    TangentElement::basis(k / 2, k % 2)
}

/// Y(θ₁,θ₂,θ₃) = (ξ_α∧ξ_β∧ξ_γ ⌟ u) · ∫ u ∧ w, where θ₁θ₂θ₃ = (ξ_α∧ξ_β∧ξ_γ) ⊗ w
/// is obtained by wedging the vector parts and the (0,1) parts separately.
pub fn yukawa(theta: [&TangentElement; 3], frame: &Frame<GScalar>, u: &Form<GScalar>) -> GScalar {
    let mut w = Form::zero();
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                if a == b || b == c || a == c {
                    continue;
                }
                let sign = GScalar::from_int(mask::sequence_sign(&[a, b, c]) as i64);
                let part = Form::wedge_all(&[
                    theta[0].form_part(frame, a),
                    theta[1].form_part(frame, b),
                    theta[2].form_part(frame, c),
                ]);
                w = w + part.scale(&sign);
            }
        }
    }
    let contraction = frame.to_frame(u).coeff(HOL);
    contraction * u.wedge(&w).integrate()
}

/// Y(∂/∂z_i, ∂/∂z_j, ∂/∂z_k) against −Q(∂_k u', ∂_i∂_j u') by central
/// differences of step h in the t-directions, pushed to z by the Jacobian.
#[derive(Clone, Debug, Serialize)]
pub struct CrossCheck {
    pub step: String,
    /// Exact |Y − FD|² maximised over (i,j,k).
    pub max_dev_sqr: String,
    pub budget: String,
    pub pass: bool,
    pub yukawa_nonzero: usize,
}

fn u_prime(t: &[GScalar; 4], basis: &SymplecticBasis) -> Result<Form<GScalar>, MirrorError> {
    let mut p = ParamPoint::zero();
    for (v, x) in ESSENTIAL_VARS.iter().zip(t) {
        p.set(*v, x.clone());
    }
    let u = volume_form_from(&p.values12());
    let inv = q_form(&u, &basis.eta[0])
        .inv()
        .ok_or_else(|| MirrorError::NormalizationPole("Q(u_t, η₀) = 0".into()))?;
    Ok(u.scale(&inv))
}

pub fn yukawa_cross_check(basis: &SymplecticBasis, step: &GScalar) -> Result<CrossCheck, MirrorError> {
    let base = ParamPoint::zero();
    let jinv = z_jacobian(&base, basis)?.inverse().ok_or(MirrorError::JacobianSingular)?;
    let thetas: Vec<TangentElement> = (0..4)
        .map(|k| {
            ESSENTIAL_VARS.iter().enumerate().fold(TangentElement::zero(), |acc, (a, &v)| {
                acc.add(&kodaira_spencer(v).scale(&jinv[(a, k)]))
            })
        })
        .collect();
    let frame = Frame::identity();
    let u0 = volume_form_from(&base.values12());
    let h = step.clone();
    let at = |shift: &[(usize, i64)]| -> Result<Form<GScalar>, MirrorError> {
        let mut t: [GScalar; 4] = std::array::from_fn(|_| GScalar::zero());
        for &(a, s) in shift {
            t[a] = &t[a] + &(&h * &GScalar::from_int(s));
        }
        u_prime(&t, basis)
    };
    let two_h_inv = (&h * &GScalar::from_int(2)).inv().expect("nonzero step");
    let h2_inv = (&h * &h).inv().expect("nonzero step");
    let quarter = GScalar::from_ratio(1, 4);
    let first: Vec<Form<GScalar>> = (0..4)
        .map(|c| Ok((at(&[(c, 1)])? - at(&[(c, -1)])?).scale(&two_h_inv)))
        .collect::<Result<_, MirrorError>>()?;
    let center = at(&[])?;
    let mut second = vec![vec![Form::zero(); 4]; 4];
    for a in 0..4 {
        for b in 0..4 {
            second[a][b] = if a == b {
                (at(&[(a, 1)])? - center.scale(&GScalar::from_int(2)) + at(&[(a, -1)])?).scale(&h2_inv)
            } else {
                (at(&[(a, 1), (b, 1)])? - at(&[(a, 1), (b, -1)])? - at(&[(a, -1), (b, 1)])?
                    + at(&[(a, -1), (b, -1)])?)
                .scale(&(&h2_inv * &quarter))
            };
        }
    }
    // G^t_abc = −Q(∂_c u', ∂_a∂_b u')
    let gt: Vec<Vec<Vec<GScalar>>> = (0..4)
        .map(|a| (0..4).map(|b| (0..4).map(|c| -q_form(&first[c], &second[a][b])).collect()).collect())
        .collect();
    let mut max = BigRational::from_integer(0.into());
    let mut nonzero = 0;
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                let mut g = GScalar::zero();
                for a in 0..4 {
                    for b in 0..4 {
                        for c in 0..4 {
                            if gt[a][b][c].is_zero() {
                                continue;
                            }
                            g = g + &gt[a][b][c] * &(&jinv[(a, i)] * &(&jinv[(b, j)] * &jinv[(c, k)]));
                        }
                    }
                }
                let y = yukawa([&thetas[i], &thetas[j], &thetas[k]], &frame, &u0);
                if !y.is_zero() {
                    nonzero += 1;
                }
                let dev = (y - g).norm_sqr();
                if dev > max {
                    max = dev;
                }
            }
        }
    }
    let budget = (&h * &h * GScalar::from_int(10)).norm_sqr();
    Ok(CrossCheck {
        step: h.to_string(),
        max_dev_sqr: max.to_string(),
        budget: format!("(10·h²)² = {budget}"),
        pass: max <= budget,
        yukawa_nonzero: nonzero,
    })
}
