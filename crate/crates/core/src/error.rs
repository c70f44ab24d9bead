use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("InvalidCartan: {0}")]
    InvalidCartan(String),
    #[error("NotFiniteType: positive-root closure exceeded {0} roots")]
    NotFiniteType(usize),
    #[error("IndexOutOfRange: index {index} not in 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("RankMismatch: expected rank {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("LengthMismatch: expected length {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("WordMismatch: operands belong to different Bott-Samelson words")]
    WordMismatch,
    #[error("ZeroForm: division by the zero linear form")]
    ZeroForm,
    #[error("NotDivisible: {0}")]
    NotDivisible(String),
    #[error("ResidualDenominator: {0}")]
    ResidualDenominator(String),
    #[error("NotInSpan: {0}")]
    NotInSpan(String),
    #[error("NotReducedWord: {0}")]
    NotReducedWord(String),
    #[error("NotLongestWord: {0}")]
    NotLongestWord(String),
    #[error("NotReducedGallery: {0}")]
    NotReducedGallery(String),
    #[error("CapExceeded: word length {len} exceeds gallery cap {cap}")]
    CapExceeded { len: usize, cap: usize },
    #[error("EmptyWord: a Bott-Samelson word needs at least one letter")]
    EmptyWord,
    #[error("Parse: {0}")]
    Parse(String),
}

impl Error {
    /// Errors that can only come from a broken invariant inside the library,
    /// never from bad user input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::ResidualDenominator(_) | Error::NotInSpan(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
