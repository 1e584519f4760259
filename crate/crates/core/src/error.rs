use std::fmt;

use num_bigint::BigInt;

/// Everything that can go wrong inside the library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Caller violated a precondition (dimension mismatch, zero vector, bad partition...).
    #[error("usage error: {0}")]
    Usage(String),

    /// A desk-scale guardrail tripped. The computation was abandoned, never truncated.
    #[error("resource exceeded: {what} (limit {limit})")]
    ResourceExceeded { what: String, limit: u64 },

    /// A bounded search ran out of budget before reaching a verdict.
    #[error("undecided: {reason} for vector {}", VecDisplay(.vector))]
    Undecided { vector: Vec<BigInt>, reason: String },

    /// A cone that must be pointed has a nontrivial lineality space.
    #[error("cone is not pointed (lineality dimension {lineality_dim}); use is_hilbert_basis for cones with lineality")]
    NotPointed { lineality_dim: usize },

    /// A graph expected to be Meyniel has a vertex without a Hoang stable set.
    #[error("input not Meyniel: no stable set through vertex {vertex} meets every maximal clique")]
    NotMeyniel { vertex: usize },

    /// Two computations of the same quantity disagreed; indicates a bug.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    /// True when the failure is a budget/cap limit rather than a logic error.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            Error::ResourceExceeded { .. } | Error::Undecided { .. }
        )
    }
}

struct VecDisplay<'a>(&'a [BigInt]);

impl fmt::Display for VecDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Usage(msg.into()))
}
