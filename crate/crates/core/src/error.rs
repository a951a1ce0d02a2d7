use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("division is not exact: nonzero remainder")]
    NonExactDivision,

    #[error("index {0} is out of range (second-kind basis is defined for n >= -2)")]
    IndexOutOfRange(i64),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("torus parameters ({n}, {l}) are not coprime: gcd = {gcd}")]
    NonCoprime { n: u64, l: u64, gcd: u64 },

    #[error("expected an odd index, got {0}")]
    NotOdd(u64),

    #[error("expected an even index, got {0}")]
    NotEven(u64),

    #[error("laurent polynomial is not symmetric under u -> 1/u")]
    AsymmetricInput,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
