use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("words have different lengths ({0} and {1})")]
    LengthMismatch(usize, usize),
    #[error("words are over different alphabets (sigma {0} and {1})")]
    AlphabetMismatch(u32, u32),
    #[error("alphabet size must be at least 2, got {0}")]
    AlphabetTooSmall(u32),
    #[error("letter {letter} is out of range for an alphabet of size {sigma}")]
    LetterOutOfRange { letter: u32, sigma: u32 },
    #[error("cannot parse {0:?} as a bit vector")]
    ParseCorrelation(String),
    #[error("cannot parse {0:?} as a word")]
    ParseWord(String),
    #[error("{0} is not a valid correlation")]
    InvalidCorrelation(String),
    #[error("{0} is not a valid autocorrelation")]
    InvalidAutocorrelation(String),
    #[error("brute-force budget exceeded: {required} candidates needed, cap is {cap}")]
    BudgetExceeded { required: u128, cap: u64 },
    #[error("length {n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("unknown method {0:?} (expected rec1, rec2, nfc or brute)")]
    UnknownMethod(String),
    #[error("{0}")]
    InvalidArgument(String),
}

impl Error {
    /// Errors that come from a resource limit rather than from bad input.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. } | Error::CapExceeded { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
