use iwa_exterior::ExteriorError;
use iwa_scalars::ScalarError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DeformationError {
    #[error("frame matrix is singular at this parameter point")]
    FrameSingular,
    #[error("dγ_t has components outside the structure-equation span: {0}")]
    StructureEquationViolation(String),
    #[error("pole: {0}")]
    Pole(String),
    #[error("closed forms apply to class (ii) only; D(t) = {0}")]
    WrongClass(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

impl From<ExteriorError> for DeformationError {
    fn from(e: ExteriorError) -> Self {
        match e {
            ExteriorError::FrameSingular => DeformationError::FrameSingular,
            ExteriorError::Parse(s) => DeformationError::Scalar(ScalarError::Parse(s)),
        }
    }
}
