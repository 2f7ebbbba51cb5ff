use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial division is not exact (nonzero remainder)")]
    DivisionNotExact,
    #[error("multinomial parts sum to {sum}, expected {n}")]
    PartsSumMismatch { n: usize, sum: usize },
    #[error("hook weight block needs m >= 2, got {0}")]
    MTooSmall(usize),
    #[error("{d} does not divide {n}")]
    NotDivisor { n: usize, d: usize },
    #[error("excedance is only defined on permutations of [n]")]
    ExcUndefined,
    #[error("word is not a hook")]
    NotAHook,
    #[error("word is not a quasi-hook")]
    NotAQuasiHook,
    #[error("lec = {lec} has no partner (maximum allowed is {max})")]
    LecOutOfRange { lec: usize, max: i64 },
    #[error("index i = {0} is excluded (i = rn)")]
    IndexExcluded(usize),
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
