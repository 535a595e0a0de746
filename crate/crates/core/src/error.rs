use alloc::string::String;
use core::fmt;

/// Errors shared by every module of the crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A rational was constructed with denominator zero.
    ZeroDenominator,
    /// A `PositiveSet` was given an element that is not strictly positive.
    NonPositiveElement,
    /// A set was scaled by a factor that is not strictly positive.
    NonPositiveScale,
    /// An operation that needs a scale factor strictly above one got one that isn't.
    LambdaTooSmall,
    /// A word that must be Dyck is not.
    NotDyck,
    /// A word that must be Hooley-Dyck is not.
    NotHooleyDyck,
    /// Divisor enumeration was asked for zero.
    ZeroInput,
    /// The step function of the empty set is undefined.
    EmptySet,
    /// A rational literal did not match `p`, `p/q` or a finite decimal.
    InvalidRationalLiteral(String),
    /// A word literal contained a letter outside its alphabet.
    InvalidLetter { position: usize, letter: char },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroDenominator => write!(f, "denominator must be nonzero"),
            Error::NonPositiveElement => write!(f, "set elements must be strictly positive"),
            Error::NonPositiveScale => write!(f, "scale factor must be strictly positive"),
            Error::LambdaTooSmall => write!(f, "lambda must be strictly greater than 1"),
            Error::NotDyck => write!(f, "word is not a Dyck word"),
            Error::NotHooleyDyck => write!(f, "word is not a Hooley-Dyck word"),
            Error::ZeroInput => write!(f, "integer must be at least 1"),
            Error::EmptySet => write!(f, "set must be nonempty"),
            Error::InvalidRationalLiteral(s) => write!(f, "invalid rational literal: {s:?}"),
            Error::InvalidLetter { position, letter } => {
                write!(f, "invalid letter {letter:?} at position {position}")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
