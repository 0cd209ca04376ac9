use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("expected an odd positive integer, got {0}")]
    NotOdd(u64),
    #[error("triangular slot {slot} given negative index {index}")]
    NegativeTriangularIndex { slot: usize, index: i64 },
    #[error("slot {0} is not a square term")]
    NotSquareSlot(usize),
    #[error("slot index {0} out of range (forms have three terms)")]
    SlotOutOfRange(usize),
    #[error("coefficients must be positive")]
    ZeroCoefficient,
    #[error("series orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("coefficient box contains no vector satisfying the ordering constraint")]
    EmptyBox,
}

pub type Result<T> = std::result::Result<T, Error>;
