//! Intersection forms, ⋆-eigenspaces and symplectic bases of H³, the
//! canonical coordinates z(t) and w(t), Yukawa couplings and the potential
//! symmetry, the torus model, the isomorphisms A_t, B_t, I_t, VHS jet checks
//! and the mirror maps of the Iwasawa family.

mod coords;
mod error;
mod isos;
mod mirror_map;
mod pairing;
mod spaces;
mod star;
mod symplectic;
mod torus;
mod vhs;

pub use coords::{
    coordinates_w, coordinates_z, kodaira_spencer, normalization_closed_form, potential_symmetry_check,
    torus_etas, torus_form_from, volume_form_from, w_jacobian, yukawa, yukawa_cross_check, z_closed_forms,
    z_jacobian, z_jets, CrossCheck, SymmetryReport, ESSENTIAL_VARS,
};
pub use error::MirrorError;
pub use isos::{bc31_to_aeppli, conclusion_square, iso_a, iso_b, lift_i, Bc31Report, LinearMap, SquareReport};
pub use mirror_map::{
    a0_on_tangents, aeppli22_at0, basis22, complexified_differential, coords_in_basis, discarded_term_class,
    gauduchon_witness, mirror_map_complexified, mirror_map_positive, omega0_sq_coords, positive_formula,
    tangent_images, MirrorImage, BASIS22_LABELS,
};
pub use pairing::{
    hermitian_pivot_signs, integrate_torus, labelled, ordered, pairing, q_form, qb_form, render_signs,
    PairingKind, PairingMatrix, Sign,
};
pub use spaces::{named_pairing, NamedSpace};
pub use star::{eigen_of_class, harmonic_part, star_frame_coords, star_split, Eigen, StarSplit};
pub use symplectic::{complete_lagrangian, default_etas, eta0_21, symplectic_complete, RealH3, SymplecticBasis};
pub use torus::{hb_matrix_b0, TorusModel};
pub use vhs::{f2_holomorphic, fg_holomorphic, h12_witness, transversality, vhs_checks, Verdict, VhsReport};
