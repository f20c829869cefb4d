use iwa_cohomology::CohomologyError;
use iwa_deformation::DeformationError;
use iwa_exterior::ExteriorError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HodgeError {
    #[error("Gram matrix is not Hermitian")]
    NotHermitian,
    #[error("metric is not positive definite (pivot {0})")]
    NotPositive(usize),
    #[error("form is not a real (1,1)-form for this structure: {0}")]
    NotMetricForm(String),
    #[error("right-hand side is not ∂̄-exact")]
    NotExact,
    #[error("form is not ∂∂̄-closed")]
    NotAeppliCycle,
    #[error("lifted form is not d-closed: {0}")]
    ClosednessFailure(String),
    #[error("expected a form of bidegree ({0},{1})")]
    WrongBidegree(usize, usize),
    #[error(transparent)]
    Deformation(#[from] DeformationError),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
}

impl From<ExteriorError> for HodgeError {
    fn from(e: ExteriorError) -> Self {
        HodgeError::Deformation(e.into())
    }
}
