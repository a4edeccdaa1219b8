//! Error types shared across the crate.

use std::fmt;

/// Errors raised by domain operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DomainError {
    /// A reducer (or mntcr argument) was zero.
    ZeroReducer,
    /// An element does not belong to (or is not canonical in) the ambient ring.
    DescriptorMismatch(String),
    /// Requested a leading monomial of the zero polynomial.
    NoLeadingMonomial,
    /// Exponent-vector lengths disagree.
    ExponentLengthMismatch { left: usize, right: usize },
    /// Ring parameters are invalid (modulus < 2, empty variable list, ...).
    InvalidRing(String),
    /// Element expression could not be parsed.
    Parse { position: usize, message: String },
}

impl fmt::Display for DomainError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DomainError::ZeroReducer => write!(f, "reduction by zero is undefined"),
            DomainError::DescriptorMismatch(what) => write!(f, "element does not fit ring: {what}"),
            DomainError::NoLeadingMonomial => write!(f, "zero polynomial has no leading monomial"),
            DomainError::ExponentLengthMismatch { left, right } => {
                write!(f, "exponent vectors have different lengths ({left} vs {right})")
            }
            DomainError::InvalidRing(what) => write!(f, "invalid ring descriptor: {what}"),
            DomainError::Parse { position, message } => {
                write!(f, "parse error at position {position}: {message}")
            }
        }
    }
}

impl std::error::Error for DomainError {}

/// Errors raised by the completion loop.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GbError {
    /// A domain operation failed.
    Domain(DomainError),
    /// Appending h = 0 violates the recursion contract.
    ZeroAppend,
    /// An update index conflicts with pairs already queued.
    StateCorruption(String),
    /// The state-transition safety limit was exceeded.
    StepLimitExceeded { limit: u64 },
    /// A critical-pair index was out of range.
    IndexOutOfRange { index: usize, len: usize },
}

impl fmt::Display for GbError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GbError::Domain(e) => write!(f, "{e}"),
            GbError::ZeroAppend => write!(f, "cannot append zero to a basis"),
            GbError::StateCorruption(what) => write!(f, "inconsistent completion state: {what}"),
            GbError::StepLimitExceeded { limit } => {
                write!(f, "step limit of {limit} state transitions exceeded")
            }
            GbError::IndexOutOfRange { index, len } => {
                write!(f, "basis index {index} out of range for length {len}")
            }
        }
    }
}

impl std::error::Error for GbError {}

impl From<DomainError> for GbError {
    fn from(e: DomainError) -> Self {
        GbError::Domain(e)
    }
}
