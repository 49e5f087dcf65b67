use thiserror::Error;

/// Errors raised by the calculator.
///
/// Variants split into two families: malformed input (bad group names,
/// weights of the wrong length, unparsable files) and violated invariants
/// (a computation produced something the theory rules out). The CLI maps
/// the first family to exit code 3 and the second to exit code 2.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("invalid weight for {group}: {reason}")]
    InvalidWeight { group: String, reason: String },

    #[error("group mismatch: {left} vs {right}")]
    GroupMismatch { left: String, right: String },

    #[error("dimension {dim} exceeds the configured cap of {cap}")]
    DimensionCap { dim: u128, cap: u64 },

    #[error("character is not Weyl-invariant: highest remaining weight {0} is not dominant")]
    NotWeylInvariant(String),

    #[error("peeling did not terminate within {0} steps")]
    PeelBound(usize),

    #[error("inexact division in {0}")]
    InexactDivision(&'static str),

    #[error("hard Lefschetz monotonicity fails for {label} at degree {degree}")]
    NegativePeel { label: String, degree: i32 },

    #[error("graded object is not symmetric under degree negation at degree {0}")]
    Asymmetric(i32),

    #[error("inconsistent constant-shift peel: {0}")]
    InconsistentPeel(String),

    #[error("result is not effective: {0}")]
    NegativeResult(String),

    #[error("unsupported label: {0}")]
    UnsupportedLabel(String),

    #[error("operator is not nilpotent")]
    NotNilpotent,

    #[error("unknown stratum: {0}")]
    UnknownStratum(String),

    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// True for errors caused by malformed input rather than a broken invariant.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::InvalidGroup(_)
                | Error::InvalidWeight { .. }
                | Error::GroupMismatch { .. }
                | Error::DimensionCap { .. }
                | Error::UnsupportedLabel(_)
                | Error::UnknownStratum(_)
                | Error::Parse { .. }
                | Error::InvalidArgument(_)
                | Error::NotNilpotent
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
