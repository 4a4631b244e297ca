use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("negative exponent {0} is not allowed in a monomial")]
    NegativeExponent(i64),

    #[error("exponent overflow")]
    Overflow,

    #[error("expected {expected} variables, got {got}")]
    Arity { expected: usize, got: usize },

    #[error("invalid ring: {0}")]
    Ring(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("enumeration over {n} variables exceeds the cap of {cap}")]
    EnumerationCap { n: usize, cap: usize },

    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}
