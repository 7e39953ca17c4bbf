use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not a prime in [2^14, 2^31)")]
    InvalidPrime(u64),

    #[error("hilbert function did not stabilize below degree cap {cap}")]
    NotStabilized { cap: usize },

    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("degenerate sample: a maximal minor vanished identically")]
    DegenerateSample,

    #[error("invalid resolution data: {0}")]
    InvalidResolutionData(String),

    #[error("resolution data {0} is not positive (need max a < min b)")]
    NonPositive(String),

    #[error("no invertible linear form found in {0} draws")]
    NoInvertibleLinearForm(usize),

    #[error("independent reducedness draws disagree: {0:?} vs {1:?}")]
    DrawDisagreement((usize, bool), (usize, bool)),

    #[error("assertion failed: {0}")]
    Assertion(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("duplicate point at line {line}")]
    DuplicatePoint { line: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Input/usage problems as opposed to failed mathematical checks.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::InvalidPrime(_)
                | Error::Parse { .. }
                | Error::DuplicatePoint { .. }
                | Error::InvalidArgument(_)
                | Error::InvalidResolutionData(_)
                | Error::NonPositive(_)
        )
    }
}
