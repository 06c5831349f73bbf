use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Arguments outside the domain an operation is defined on.
    #[error("invalid arguments: {0}")]
    InvalidArgument(String),

    #[error("graph has {vertices} vertices, above the limit of {limit}")]
    VertexLimit { vertices: usize, limit: usize },

    #[error("search exceeded the node budget of {budget}")]
    BudgetExceeded { budget: u64 },

    #[error("edge ({0}, {1}) is not in the graph")]
    MissingEdge(usize, usize),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    /// True for the errors raised by cost guards rather than bad input.
    pub fn is_limit(&self) -> bool {
        matches!(
            self,
            Error::VertexLimit { .. } | Error::BudgetExceeded { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
