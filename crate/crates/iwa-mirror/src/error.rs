use iwa_cohomology::CohomologyError;
use iwa_deformation::DeformationError;
use iwa_hodge::HodgeError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MirrorError {
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("isotropy failure: {0}")]
    IsotropyError(String),
    #[error("class is not real: {0}")]
    NotReal(String),
    #[error("normalization vanishes: {0}")]
    NormalizationPole(String),
    #[error("coordinate Jacobian is singular")]
    JacobianSingular,
    #[error("not positive: {0}")]
    NotPositive(String),
    #[error("point is off the essential slice t31 = t32 = 0")]
    OffSlice,
    #[error(transparent)]
    Deformation(#[from] DeformationError),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
    #[error(transparent)]
    Hodge(#[from] HodgeError),
}
