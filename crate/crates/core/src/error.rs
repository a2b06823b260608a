use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is singular (rank {rank} < {size})")]
    SingularMatrix { rank: usize, size: usize },

    #[error("invalid group table: {0}")]
    InvalidGroup(String),

    #[error("construction requires characteristic different from {0}")]
    BadCharacteristic(u64),

    #[error("subspace is not a right ideal: {0}")]
    NotRightIdeal(String),

    #[error("idempotent is not a two-sided unit on its ideal: {0}")]
    NotUnitOnA(String),

    #[error("seed is not a subalgebra: {0}")]
    SeedNotSubalgebra(String),

    #[error("partial smash product is not associative at {0}")]
    AssociativityFailure(String),

    #[error("algebra has no unit")]
    NonUnital,

    #[error("idempotent {0} is not central")]
    NonCentralIdempotent(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("verification failed for {what}: {detail}")]
    VerificationFailed { what: String, detail: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("shape error: {0}")]
    Shape(String),
}

impl Error {
    /// True when the input was well formed but some required identity fails.
    pub fn is_verification_failure(&self) -> bool {
        matches!(
            self,
            Error::SingularMatrix { .. }
                | Error::NotRightIdeal(_)
                | Error::NotUnitOnA(_)
                | Error::SeedNotSubalgebra(_)
                | Error::AssociativityFailure(_)
                | Error::NonCentralIdempotent(_)
                | Error::VerificationFailed { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
