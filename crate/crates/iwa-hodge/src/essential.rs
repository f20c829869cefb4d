use iwa_cohomology::BigradedComplex;
use iwa_deformation::gamma_forms;
use iwa_exterior::Form;
use iwa_scalars::GScalar;

use crate::{HodgeError, Metric};

/// ⋆_t conj(Γ_j(t)), the (1,2) forms spanning H^{1,2}_[γ](X_t).
pub fn h12_gamma_forms(m: &Metric) -> Result<[Form<GScalar>; 4], HodgeError> {
    let g = gamma_forms(m.structure())?;
    Ok(g.map(|u| m.star(&u.conj())))
}

/// The ten 3-forms Ω_t, Γ₁..Γ₄, ⋆conj(Γ₁)..⋆conj(Γ₄), conj(Ω_t).
pub fn weight_three_generators(m: &Metric) -> Result<Vec<Form<GScalar>>, HodgeError> {
    let omega = m.structure().volume_form();
    let mut out = vec![omega.clone()];
    out.extend(gamma_forms(m.structure())?);
    out.extend(h12_gamma_forms(m)?);
    out.push(omega.conj());
    Ok(out)
}

/// Rank of H^{3,0} ⊕ H^{2,1}_[γ] ⊕ H^{1,2}_[γ] ⊕ H^{0,3} inside H³_DR.
pub fn weight_three_rank(m: &Metric) -> Result<usize, HodgeError> {
    let gens = weight_three_generators(m)?;
    Ok(BigradedComplex::standard().de_rham(3).class_rank(&gens)?)
}
