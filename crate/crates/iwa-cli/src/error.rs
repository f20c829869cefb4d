use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    /// `kind` is the innermost library error variant, e.g. `NotPositive`.
    #[error("{kind}: {message}")]
    Domain { kind: String, message: String },
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        2
    }
}

const WRAPPERS: [&str; 6] = ["Deformation(", "Cohomology(", "Hodge(", "Scalar(", "Exterior(", "Mirror("];

/// `Hodge(NotPositive(3))` → `NotPositive`.
fn innermost_variant(debug: &str) -> String {
    let mut s = debug;
    while let Some(w) = WRAPPERS.iter().find(|w| s.starts_with(**w)) {
        s = &s[w.len()..];
    }
    s.split(|c: char| !c.is_alphanumeric() && c != '_').next().unwrap_or(s).to_string()
}

macro_rules! domain_errors {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Domain {
                    kind: innermost_variant(&format!("{e:?}")),
                    message: e.to_string(),
                }
            }
        }
    )*};
}

domain_errors!(
    iwa_scalars::ScalarError,
    iwa_exterior::ExteriorError,
    iwa_deformation::DeformationError,
    iwa_cohomology::CohomologyError,
    iwa_hodge::HodgeError,
    iwa_mirror::MirrorError
);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn variant_names() {
        assert_eq!(innermost_variant("Hodge(NotPositive(3))"), "NotPositive");
        assert_eq!(innermost_variant("OffSlice"), "OffSlice");
        assert_eq!(innermost_variant("Deformation(Scalar(Parse(\"x\")))"), "Parse");
    }
}
