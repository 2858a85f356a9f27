use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{value} is not a nonzero zero-divisor of Z_{n}")]
    NotAZeroDivisor { n: u64, value: u64 },

    #[error("{d} is not a proper divisor of {n}")]
    NotAProperDivisor { n: u64, d: u64 },

    #[error("no closed form applies to n = {n}: {reason}")]
    NotApplicable { n: u64, reason: &'static str },

    #[error("{what} refused: size {size} exceeds limit {limit}")]
    GuardRefusal { what: &'static str, size: u64, limit: u64 },

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("eigensolver did not converge on a matrix of order {order} after {iterations} iterations")]
    NoConvergence { order: usize, iterations: usize },

    #[error("oracle paths disagree for n = {n} on pair ({x}, {y})")]
    OracleDisagreement { n: u64, x: u64, y: u64 },
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidArgument(_)
            | Error::NotAZeroDivisor { .. }
            | Error::NotAProperDivisor { .. }
            | Error::NotApplicable { .. } => 2,
            Error::GuardRefusal { .. } => 3,
            Error::Overflow(_) | Error::NoConvergence { .. } | Error::OracleDisagreement { .. } => 4,
        }
    }

    /// Short machine-readable tag.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidArgument(_) => "invalid_argument",
            Error::NotAZeroDivisor { .. } => "not_a_zero_divisor",
            Error::NotAProperDivisor { .. } => "not_a_proper_divisor",
            Error::NotApplicable { .. } => "not_applicable",
            Error::GuardRefusal { .. } => "guard_refusal",
            Error::Overflow(_) => "overflow",
            Error::NoConvergence { .. } => "no_convergence",
            Error::OracleDisagreement { .. } => "oracle_disagreement",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
