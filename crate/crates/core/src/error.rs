use thiserror::Error;

use crate::lattice::{LatticeParams, Symbol};

/// Broad classification used by front-ends to pick an exit status.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    /// Bad input: out-of-range parameters, malformed words, invalid functions.
    Domain,
    /// A configured enumeration cap or size guard was hit.
    Resource,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid lattice parameters: {0}")]
    InvalidParams(String),
    #[error("words belong to different lattices: {0} and {1}")]
    ParamsMismatch(LatticeParams, LatticeParams),
    #[error("{0}")]
    Domain(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Validation(#[from] ValidationError),
    #[error("enumeration cap of {cap} exceeded after {partial} items")]
    CapExceeded { cap: u64, partial: u64 },
    #[error("out of desk scale: {0}")]
    OutOfScale(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::CapExceeded { .. } | Error::OutOfScale(_) => ErrorKind::Resource,
            _ => ErrorKind::Domain,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Rejection reasons for the textual word form `i1..ir|j1..j(n-r)`.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("missing '|' separator in {0:?}")]
    MissingSeparator(String),
    #[error("{side} side has {found} symbols, expected {expected}")]
    WrongLength {
        side: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("unreadable symbol {0:?}")]
    BadSymbol(String),
    #[error("symbol {value} at position {position} exceeds the largest mark {max} of its side")]
    OutOfRange {
        position: usize,
        value: u32,
        max: u32,
    },
    #[error(
        "ordering rule violated at position {position}: symbols must weakly decrease \
         left to right, with zeros closing the left side and opening the right side"
    )]
    Ordering { position: usize },
    #[error(
        "distinctness rule violated at position {position}: the nonzero symbols of each side \
         must be strictly decreasing"
    )]
    Repeated { position: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("no value given for symbol {0}")]
    MissingValue(Symbol),
    #[error("symbol {0} is not in the alphabet")]
    UnknownSymbol(Symbol),
    #[error("the zero mark must be valued 0")]
    NonzeroAtZero,
    #[error("expected {expected} {side} values, found {found}")]
    WrongCount {
        side: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("chain inequality {0} does not hold")]
    Chain(String),
    #[error("unreadable rational {0:?}")]
    BadRational(String),
    #[error("total sum is negative, so this is not a weight function")]
    NotWeight,
}
