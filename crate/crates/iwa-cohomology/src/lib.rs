//! Invariant cohomologies of the Iwasawa manifold and its small deformations:
//! de Rham, Dolbeault, Bott–Chern, Aeppli, the Frölicher spectral sequence
//! and triple Massey products. Everything is exact linear algebra over ℚ(i)
//! on left-invariant forms.

mod complex;
mod error;
pub mod linalg;
mod maps;
mod massey;
mod space;
mod table;

pub use complex::{bidegree_basis, BigradedComplex};
pub use error::CohomologyError;
pub use maps::{duality_pairing, gamma_classes, natural_map_is_iso, natural_map_rank, GammaClasses};
pub use massey::{massey_triple, primitive, MasseyOutcome, MasseyProduct};
pub use space::{CohomologySpace, Coords, SpaceKind};
pub use table::{CohomologyNumbers, Grid};
