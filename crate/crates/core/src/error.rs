use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument is outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The requested computation exceeds its work budget.
    #[error("workload of {workload} exceeds the budget of {budget} ({what})")]
    Resource {
        what: &'static str,
        workload: u128,
        budget: u128,
    },

    /// Two dominance-comparable partitions share a Laplace–Beltrami
    /// eigenvalue, so the eigenvector is not pinned down.
    #[error("degenerate eigenvalue for {partition} at alpha = {alpha}: {detail}")]
    Degeneracy {
        partition: String,
        alpha: String,
        detail: String,
    },

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(position: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: msg.into(),
        }
    }
}
