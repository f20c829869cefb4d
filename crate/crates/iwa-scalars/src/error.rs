use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("cannot parse `{0}` as a Gaussian rational")]
    Parse(String),
    #[error("pole: denominator vanishes at the evaluation point")]
    Pole,
    #[error("division by zero")]
    DivisionByZero,
    #[error("unknown parameter `{0}`")]
    UnknownParam(String),
}
