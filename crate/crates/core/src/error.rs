use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),

    #[error("graph has {n} vertices, exceeding the limit of {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("set is not a total dominating set")]
    NotTdSet,

    #[error("invalid coloring: {0}")]
    InvalidColoring(String),

    #[error("not a total dominator coloring: {0}")]
    NotTdColoring(String),

    #[error("graph is not a {class}: {reason}")]
    WrongClass { class: &'static str, reason: String },

    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error("search budget of {limit} nodes exceeded")]
    BudgetExceeded { limit: u64 },
}

impl Error {
    pub(crate) fn wrong_class(class: &'static str, reason: impl Into<String>) -> Self {
        Error::WrongClass {
            class,
            reason: reason.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
