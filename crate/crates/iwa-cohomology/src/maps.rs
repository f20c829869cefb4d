use iwa_deformation::{gamma_forms, ComplexStructure};
use iwa_exterior::Form;
use iwa_scalars::{GScalar, Matrix};

use crate::{BigradedComplex, CohomologyError, CohomologySpace, SpaceKind};

/// Rank of the map induced by the identity on forms from `from` to `to`.
pub fn natural_map_rank(from: &CohomologySpace, to: &CohomologySpace) -> Result<usize, CohomologyError> {
    to.class_rank(&from.representatives())
}

/// Whether the natural map between two spaces is an isomorphism.
pub fn natural_map_is_iso(from: &CohomologySpace, to: &CohomologySpace) -> Result<bool, CohomologyError> {
    let r = natural_map_rank(from, to)?;
    Ok(r == from.dimension() && r == to.dimension())
}

/// ⟨u, v⟩ = ∫ u ∧ v on representatives of H_BC^{p,q} × H_A^{3−p,3−q}.
pub fn duality_pairing(bc: &CohomologySpace, ae: &CohomologySpace) -> Result<Matrix<GScalar>, CohomologyError> {
    match (bc.kind(), ae.kind()) {
        (SpaceKind::BottChern(p, q), SpaceKind::Aeppli(r, s)) if p + r == 3 && q + s == 3 => {}
        (a, b) => return Err(CohomologyError::KindMismatch(format!("{a} × {b}"))),
    }
    let left = bc.representatives();
    let right = ae.representatives();
    Ok(Matrix::from_rows(
        left.iter()
            .map(|u| right.iter().map(|v| u.wedge(v).integrate()).collect())
            .collect(),
    ))
}

/// The classes of Γ₁..Γ₄ in H^{2,1}_∂̄ and in H³_DR.
#[derive(Clone, Debug)]
pub struct GammaClasses {
    pub forms: [Form<GScalar>; 4],
    pub dolbeault_rank: usize,
    pub de_rham_rank: usize,
}

pub fn gamma_classes(j: &ComplexStructure) -> Result<GammaClasses, CohomologyError> {
    let forms = gamma_forms(j)?;
    let complex = BigradedComplex::new(j);
    let dolbeault_rank = complex.dolbeault(2, 1).class_rank(&forms)?;
    let de_rham_rank = complex.de_rham(3).class_rank(&forms)?;
    Ok(GammaClasses {
        forms,
        dolbeault_rank,
        de_rham_rank,
    })
}
