use iwa_cohomology::linalg;
use iwa_exterior::mask::{self, Mask};
use iwa_exterior::{render_form, Form};
use iwa_scalars::{GScalar, Matrix};

use crate::{HodgeError, LaplacianKind, Metric, Op, Support};

fn psi_vec(m: &Metric, u: &Form<GScalar>, basis: &[Mask], p: usize, q: usize) -> Result<Vec<GScalar>, HodgeError> {
    let v = m.psi().to_frame(u);
    if v.terms().any(|(s, _)| !basis.contains(&s)) {
        return Err(HodgeError::WrongBidegree(p, q));
    }
    Ok(v.to_vec(basis))
}

fn delbar_block(m: &Metric, p: usize, q: usize) -> Matrix<GScalar> {
    let src = Support::Bidegree(p, q).masks();
    let dst = Support::Bidegree(p, q + 1).masks();
    let cols: Vec<Vec<GScalar>> = src
        .iter()
        .map(|&s| m.psi().delbar_frame(&Form::monomial(s, GScalar::one())).to_vec(&dst))
        .collect();
    Matrix::from_cols(dst.len(), &cols)
}

impl Metric {
    /// The solution x of ∂̄x = y of bidegree (p, q) orthogonal to ker ∂̄,
    /// i.e. of minimal L² norm.
    pub fn min_norm_solve_delbar(&self, y: &Form<GScalar>, p: usize, q: usize) -> Result<Form<GScalar>, HodgeError> {
        let dst = Support::Bidegree(p, q + 1).masks();
        let src = Support::Bidegree(p, q).masks();
        let rhs = psi_vec(self, y, &dst, p, q + 1)?;
        let a = delbar_block(self, p, q);
        let x = if dst.is_empty() {
            vec![GScalar::zero(); src.len()]
        } else {
            a.solve(&rhs).ok_or(HodgeError::NotExact)?
        };
        let x = self.psi().from_frame(&Form::from_vec(&src, &x));
        let kernel: Vec<Form<GScalar>> = linalg::kernel(&a)
            .into_iter()
            .map(|v| self.psi().from_frame(&Form::from_vec(&src, &v)))
            .collect();
        let x = self.project_out(&x, &kernel);
        debug_assert!(kernel.iter().all(|k| self.inner(&x, k).is_zero()));
        Ok(x)
    }

    /// The Aeppli-harmonic representative of the Aeppli class of a
    /// ∂∂̄-closed (p, q)-form.
    pub fn aeppli_harmonic_rep(&self, u: &Form<GScalar>, p: usize, q: usize) -> Result<Form<GScalar>, HodgeError> {
        let basis = Support::Bidegree(p, q).masks();
        let v = psi_vec(self, u, &basis, p, q)?;
        if !self.apply(Op::DelDelBar, u).is_zero() {
            return Err(HodgeError::NotAeppliCycle);
        }
        let harmonic = self.harmonic(LaplacianKind::Aeppli, Support::Bidegree(p, q));
        let mut gens: Vec<Vec<GScalar>> = harmonic
            .iter()
            .map(|h| self.psi().to_frame(h).to_vec(&basis))
            .collect();
        let k = gens.len();
        let image = |op: fn(&iwa_exterior::Frame<GScalar>, &Form<GScalar>) -> Form<GScalar>, src: Support| {
            src.masks()
                .into_iter()
                .map(|s| op(self.psi(), &Form::monomial(s, GScalar::one())).to_vec(&basis))
                .collect::<Vec<_>>()
        };
        if p > 0 {
            gens.extend(image(|f, u| f.del_frame(u), Support::Bidegree(p - 1, q)));
        }
        if q > 0 {
            gens.extend(image(|f, u| f.delbar_frame(u), Support::Bidegree(p, q - 1)));
        }
        let c = linalg::express(&gens, &v).ok_or(HodgeError::NotAeppliCycle)?;
        Ok(harmonic
            .iter()
            .zip(&c[..k])
            .fold(Form::zero(), |acc, (h, ci)| acc + h.scale(ci)))
    }
}

/// Q_ω of an Aeppli (2,2)-class: Ω = Ω³¹ + Ω²² + conj(Ω̃³¹), where Ω²² is the
/// Aeppli-harmonic representative, Ω³¹ the minimal solution of
/// ∂̄Ω³¹ = −∂Ω²² and Ω̃³¹ that of ∂̄Ω̃³¹ = −∂ conj(Ω²²). For real classes this is
/// the usual Ω³¹ + Ω²² + conj(Ω³¹); in general it is its ℂ-linear extension.
#[derive(Clone, Debug)]
pub struct GauduchonLift {
    pub harmonic: Form<GScalar>,
    pub omega31: Form<GScalar>,
    pub omega13: Form<GScalar>,
    pub omega: Form<GScalar>,
}

pub fn gauduchon_lift(m: &Metric, class_rep: &Form<GScalar>) -> Result<GauduchonLift, HodgeError> {
    let h = m.aeppli_harmonic_rep(class_rep, 2, 2)?;
    let x = m.min_norm_solve_delbar(&-m.apply(Op::Del, &h), 3, 1)?;
    let y = m.min_norm_solve_delbar(&-m.apply(Op::Del, &h.conj()), 3, 1)?;
    let omega13 = y.conj();
    let omega = x.clone() + h.clone() + omega13.clone();
    let d = omega.d();
    if !d.is_zero() {
        return Err(HodgeError::ClosednessFailure(render_form(&d)));
    }
    Ok(GauduchonLift {
        harmonic: h,
        omega31: x,
        omega13,
        omega,
    })
}

/// P_t: the J-(2,2) component of a closed 4-form, whose Aeppli class is the image.
pub fn aeppli_projection(m: &Metric, omega: &Form<GScalar>) -> Form<GScalar> {
    m.structure().frame().part(omega, 2, 2)
}

/// The four (2,2)-forms φ₁φ₃φ̄₁φ̄₃, φ₁φ₃φ̄₂φ̄₃, φ₂φ₃φ̄₁φ̄₃, φ₂φ₃φ̄₂φ̄₃ of a structure
/// (α_tγ_tᾱ_tγ̄_t, ...), which generate H^{2,2}_A.
pub fn aeppli22_generators(m: &Metric) -> [Form<GScalar>; 4] {
    let f = m.structure().frame();
    let g = |a: Mask, b: Mask| {
        let seq = [mask::indices(a)[0], 2, mask::indices(b)[0], 5];
        let sign = GScalar::from_int(mask::sequence_sign(&seq) as i64);
        f.frame_monomial(mask::from_indices(&seq)).scale(&sign)
    };
    [
        g(mask::ALPHA, mask::ALPHA_BAR),
        g(mask::ALPHA, mask::BETA_BAR),
        g(mask::BETA, mask::ALPHA_BAR),
        g(mask::BETA, mask::BETA_BAR),
    ]
}
