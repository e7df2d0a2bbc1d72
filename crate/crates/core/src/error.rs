//! Error type shared by all modules of the crate.

use std::fmt;

/// Failure modes of exact bicomplex computations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// The operand is zero or a zero divisor, so no inverse exists.
    NonInvertible,
    /// The requested value exists but cannot be written in the active
    /// scalar ring. The payload names the offending quantity.
    NotRepresentable(String),
    /// A hyperplane was given the zero vector as its normal.
    ZeroNormal,
    /// A composition of two conjugations matched none of the eight
    /// known maps. Cannot occur for genuine conjugations; reported
    /// instead of panicking so that table builders stay total.
    UnidentifiableComposition,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonInvertible => write!(f, "operand is zero or a zero divisor"),
            Error::NotRepresentable(what) => {
                write!(f, "not representable in the scalar ring: {what}")
            }
            Error::ZeroNormal => write!(f, "hyperplane normal must be nonzero"),
            Error::UnidentifiableComposition => {
                write!(f, "composition does not match any of the eight conjugations")
            }
        }
    }
}

impl std::error::Error for Error {}
