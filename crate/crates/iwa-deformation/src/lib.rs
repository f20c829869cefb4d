//! The Kuranishi family of the Iwasawa manifold: deformed frames, Nakamura
//! classes, structure coefficients σ, the forms Γ_j(t), the metrics ω_t and
//! the Calabi–Yau contraction.

mod cy;
mod error;
mod gamma;
mod metric;
mod sigma;
mod structure;

pub use cy::{contract_with_gamma, cy_isomorphism, gamma_contraction_kernel, TangentElement};
pub use error::DeformationError;
pub use gamma::{
    gamma1_corrected, gamma1_formal, gamma1_printed, gamma_forms, gamma_forms_from,
    isolated_conjugate_terms, FormalExpansion,
};
pub use metric::{hermitian_matrix, omega11, omega11_split, omega_from};
pub use sigma::{
    appendix_functions, sigma_appendix, sigma_from_frame, structure_defect, AppendixFunctions,
    CVariant, Sigma, SIGMA_MASKS, SIGMA_NAMES,
};
pub use structure::{
    build_structure, jet_frame, kuranishi_covectors, nakamura_class, poly_covectors,
    ComplexStructure, NakamuraClass,
};
