use iwa_exterior::mask::{ALPHA, ALPHA_BAR, BETA, BETA_BAR, GAMMA, GAMMA_BAR};
use iwa_exterior::Form;
use iwa_scalars::{Coeff, GScalar, ParamPoint};

use crate::ComplexStructure;

/// ω = i φ₁∧φ̄₁ + i φ₂∧φ̄₂ + i φ₃∧φ̄₃ for a list of six covectors.
pub fn omega_from<C: Coeff>(covs: &[Form<C>; 6]) -> Form<C> {
    (0..3).fold(Form::zero(), |acc, k| {
        acc + covs[k].wedge(&covs[k + 3]).scale(&C::i())
    })
}

impl ComplexStructure {
    /// The metric ω_t = iα_t∧ᾱ_t + iβ_t∧β̄_t + iγ_t∧γ̄_t.
    pub fn omega(&self) -> Form<GScalar> {
        omega_from(&self.covectors())
    }
}

/// The J₀-(1,1) part of ω_t, read off by splitting.
pub fn omega11_split(j: &ComplexStructure) -> Form<GScalar> {
    j.omega().part_j0(1, 1)
}

/// The closed form (1+c₁) iαᾱ + (1+c₂) iββ̄ + (1+c₃) iγγ̄ + d iαβ̄ + d̄ iβᾱ with
/// c₁ = −(|t11|²+|t21|²+|t31|²), c₂ = −(|t12|²+|t22|²+|t32|²), c₃ = −|D|²,
/// d = −(t12 t̄11 + t22 t̄21 + t32 t̄31).
///
/// It agrees with [`omega11_split`] when D t31 = D t32 = 0, in particular on
/// the essential slice.
pub fn omega11(t: &ParamPoint) -> Form<GScalar> {
    let n = |i: usize, l: usize| GScalar::from_rational(t.t(i, l).norm_sqr());
    let one = GScalar::one();
    let c1 = -(n(1, 1) + n(2, 1) + n(3, 1));
    let c2 = -(n(1, 2) + n(2, 2) + n(3, 2));
    let c3 = -GScalar::from_rational(t.d().norm_sqr());
    let d = -(t.t(1, 2) * &t.t(1, 1).conj() + t.t(2, 2) * &t.t(2, 1).conj() + t.t(3, 2) * &t.t(3, 1).conj());
    let i = GScalar::i();
    Form::from_terms([
        (ALPHA | ALPHA_BAR, (&one + &c1) * &i),
        (BETA | BETA_BAR, (&one + &c2) * &i),
        (GAMMA | GAMMA_BAR, (&one + &c3) * &i),
        (ALPHA | BETA_BAR, &d * &i),
        (BETA | ALPHA_BAR, d.conj() * &i),
    ])
}

/// The (1,1) Hermitian matrix G with ω = i Σ G_jk e_j∧ē_k on the fixed
/// coframe; used to test positivity.
pub fn hermitian_matrix(omega: &Form<GScalar>) -> [[GScalar; 3]; 3] {
    let mi = -GScalar::i();
    std::array::from_fn(|j| {
        std::array::from_fn(|k| {
            let sign = iwa_exterior::mask::wedge_sign(1 << j, 1 << (k + 3));
            omega.coeff((1 << j) | (1 << (k + 3))) * &mi * &GScalar::from_int(sign as i64)
        })
    })
}
