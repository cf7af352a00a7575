use alloc::string::String;
use core::fmt;

use crate::root_system::SystemId;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A system name or (family, rank) pair outside the supported range.
    UnsupportedSystem(String),
    DimensionMismatch { expected: usize, found: usize },
    SystemMismatch { left: SystemId, right: SystemId },
    NotInRootLattice,
    NotClosed,
    NotCoclosed,
    GroupTooLarge { order: usize, cap: usize },
    DegreeMismatch { expected: usize, found: usize },
    /// The exact triangular solve produced a non-integral quotient.
    NonIntegralSolution,
    Overflow,
    WrongType { expected: &'static str, found: SystemId },
    InvalidCoordinate { index: usize, dim: usize },
    MalformedWord(String),
    Precondition(&'static str),
    NegativeTauExponent,
    NotASignedPermutation,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UnsupportedSystem(s) => write!(f, "unsupported system: {s}"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::SystemMismatch { left, right } => {
                write!(f, "root system mismatch: {left} vs {right}")
            }
            Error::NotInRootLattice => f.write_str("weight is not in the root lattice"),
            Error::NotClosed => f.write_str("root subset is not closed"),
            Error::NotCoclosed => f.write_str("root subset is not coclosed"),
            Error::GroupTooLarge { order, cap } => {
                write!(f, "Weyl group of order {order} exceeds enumeration cap {cap}")
            }
            Error::DegreeMismatch { expected, found } => {
                write!(f, "degree mismatch: expected {expected}, found {found}")
            }
            Error::NonIntegralSolution => f.write_str("non-integral solution in triangular solve"),
            Error::Overflow => f.write_str("integer overflow"),
            Error::WrongType { expected, found } => {
                write!(f, "operation requires type {expected}, got {found}")
            }
            Error::InvalidCoordinate { index, dim } => {
                write!(f, "coordinate index {index} out of range 1..={dim}")
            }
            Error::MalformedWord(w) => write!(f, "malformed reduced word: {w:?}"),
            Error::Precondition(what) => write!(f, "precondition violated: {what}"),
            Error::NegativeTauExponent => f.write_str("negative tau exponent in deformed product"),
            Error::NotASignedPermutation => {
                f.write_str("signed permutation is not an element of the Weyl group")
            }
        }
    }
}

impl core::error::Error for Error {}
