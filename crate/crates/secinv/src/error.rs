use thiserror::Error;

/// Errors produced by the kernel.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,

    #[error("monomial order mismatch")]
    OrderMismatch,

    #[error("polynomial is not homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("group closure exceeds the cap of {cap} elements")]
    GroupTooLarge { cap: usize },

    #[error("polynomial is already a member of the ideal")]
    AlreadyMember,

    #[error("degree {degree} exceeds the basis validity bound {valid_up_to}")]
    DegreeOutOfRange { degree: u32, valid_up_to: u32 },

    #[error("extension polynomial has degree {degree}, basis is valid up to {valid_up_to}")]
    DegreeMismatch { degree: u32, valid_up_to: u32 },

    #[error("invalid primary invariants: {0}")]
    InvalidPrimaries(String),

    #[error("Molien series produced a non-integer coefficient at degree {0}")]
    NonIntegerMolienCoefficient(u32),

    #[error("negative secondary count m_{0}: the primaries do not form a homogeneous system of parameters")]
    NegativeSecondaryCount(u32),

    #[error("degree cap {cap} overrun: found {found} of {expected} secondary invariants")]
    DegreeCapOverrun { cap: u32, found: usize, expected: usize },

    #[error("{0}")]
    Problem(String),
}

pub type Result<T> = std::result::Result<T, Error>;
