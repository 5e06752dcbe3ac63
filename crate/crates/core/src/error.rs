use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("not a prime: {0}")]
    NotPrime(u64),
    #[error("field too large: q = {0}")]
    FieldTooLarge(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("arithmetic overflow: {0}")]
    Overflow(String),
    #[error("matrix is singular")]
    Singular,
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("construction failed: {0}")]
    Construction(String),
    #[error("comparison could not be decided at available precision")]
    Undecided,
}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
