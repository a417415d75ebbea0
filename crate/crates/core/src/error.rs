use thiserror::Error;

/// Errors raised by field, polynomial, matrix and code operations.
///
/// Decoding failures are reported separately through
/// [`DecodeError`](crate::interp::DecodeError); they are expected outcomes
/// on a noisy channel rather than misuse of the API.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported field: {0}")]
    UnsupportedField(String),
    #[error("{0} is not a primitive element of the field")]
    NotPrimitive(u32),
    #[error("{value} is not an element of a field of order {order}")]
    NotAnElement { value: u64, order: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("discrete logarithm of zero")]
    DlogOfZero,
    #[error("polynomial division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NonSquare { rows: usize, cols: usize },
    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("position {position} is outside 0..{len}")]
    PositionOutOfRange { position: usize, len: usize },
    #[error("invalid code parameters: {0}")]
    InvalidCode(String),
    #[error("{0} codewords is too many to enumerate")]
    TooLargeToEnumerate(u128),
    #[error("invalid trial configuration: {0}")]
    ConfigInvalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
