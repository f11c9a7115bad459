use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Structural validation failure. `path` names the offending field in
    /// the JSON layout of the value, e.g. `rows[1][3]`.
    #[error("{}{reason}", if path.is_empty() { String::new() } else { format!("{path}: ") })]
    Invalid { path: String, reason: String },

    #[error("size {size} exceeds the enumeration bound {bound}")]
    BoundExceeded { size: usize, bound: usize },

    #[error("forward step requested on a standard state")]
    AlreadyStandard,

    #[error("state is not the image of a forward step: {0}")]
    NotInImage(String),

    #[error("forward iteration did not terminate within {budget} steps")]
    StepBudgetExceeded { budget: usize },
}

impl Error {
    pub(crate) fn invalid(path: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Invalid {
            path: path.into(),
            reason: reason.into(),
        }
    }

    /// Prefix the field path of an `Invalid` error with `outer`.
    pub fn within(self, outer: &str) -> Self {
        match self {
            Error::Invalid { path, reason } => {
                let path = if path.is_empty() {
                    outer.to_string()
                } else if path.starts_with('[') {
                    format!("{outer}{path}")
                } else {
                    format!("{outer}.{path}")
                };
                Error::Invalid { path, reason }
            }
            other => other,
        }
    }
}
