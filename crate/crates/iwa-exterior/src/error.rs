use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExteriorError {
    #[error("frame matrix is singular")]
    FrameSingular,
    #[error("cannot parse form: {0}")]
    Parse(String),
}
