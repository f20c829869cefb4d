use iwa_deformation::DeformationError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomologyError {
    #[error("form does not lie in the ambient space of {0}")]
    WrongDegree(String),
    #[error("form is not a cycle for {0}")]
    NotACycle(String),
    #[error("d1 is not well defined: {0}")]
    WellDefinedness(String),
    #[error("pairing needs dual bidegrees: {0}")]
    KindMismatch(String),
    #[error(transparent)]
    Deformation(#[from] DeformationError),
}
