//! Invariant Hermitian metrics on the Iwasawa manifold and its deformations:
//! Hodge star, formal adjoints, Laplacians and their kernels, minimal
//! ∂̄-solutions, metric conditions and the lift of Aeppli classes to de Rham
//! classes. All operators are finite matrices over ℚ(i).

mod error;
mod essential;
mod metric;
mod ops;
mod predicates;
mod solve;

pub use error::HodgeError;
pub use essential::{h12_gamma_forms, weight_three_generators, weight_three_rank};
pub use metric::{Gram, Metric};
pub use ops::{LaplacianKind, Op, Support};
pub use predicates::{metric_predicates, MetricPredicates, Verdict};
pub use solve::{aeppli22_generators, aeppli_projection, gauduchon_lift, GauduchonLift};
