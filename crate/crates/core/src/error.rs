use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("letter 0 is not an Artin generator")]
    ZeroLetter,

    #[error("strand index {index} exceeds the configured maximum {max}")]
    StrandIndexTooLarge { index: u64, max: u32 },

    #[error("strand count too small: word needs {needed} strands, got {given}")]
    StrandCountTooSmall { needed: usize, given: usize },

    #[error("parse error at token {position} ({token:?}): {reason}")]
    Parse {
        position: usize,
        token: String,
        reason: &'static str,
    },

    #[error("word problem budget exhausted after {steps} handle reductions")]
    BudgetExhausted { steps: u64 },

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("matrix is not square")]
    NotSquare,

    #[error("invalid size: {0}")]
    InvalidSize(String),

    #[error("not in commutator subgroup: exponent sum is {0}")]
    NotInCommutatorSubgroup(i64),

    #[error("hypothesis violated: x does not commute with y^z")]
    HypothesisViolated,

    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),

    #[error("missing witness: {0}")]
    MissingWitness(String),

    #[error("malformed certificate file: {0}")]
    Format(String),
}

impl Error {
    /// True for errors that report a failed mathematical check rather than
    /// bad input.
    pub fn is_verification_failure(&self) -> bool {
        matches!(self, Error::InvalidCertificate(_))
    }
}
