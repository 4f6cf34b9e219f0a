//! Error type shared by every module of the crate.

use core::fmt;

use crate::period::Sign;

/// Errors raised by exact and numeric operations.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// The operation requires an even weight.
    WeightNotEven(usize),
    /// The operation requires an odd weight.
    WeightNotOdd(usize),
    /// Weight below the smallest value the operation is defined for.
    WeightTooSmall { weight: usize, min: usize },
    /// Univariate degree exceeds the homogenization target.
    DegreeTooLarge { degree: usize, target: usize },
    /// The polynomial is not in the requested period-polynomial eigenspace.
    NotPeriodPolynomial(Sign),
    /// The polynomial is not symmetric under swapping the two variables.
    NotSymmetric,
    /// Series argument outside the convergent range.
    Divergent {
        name: &'static str,
        min: u32,
        got: u32,
    },
    /// Residue class index out of range for the given modulus.
    ClassOutOfRange { index: u32, modulus: u32 },
    /// The requested tolerance is below what f64 summation can guarantee.
    PrecisionUnattainable { requested: f64, achievable: f64 },
    /// The elimination step needs a nonzero relation.
    ZeroRelation,
    /// The combined vector failed the left-kernel check against the Zagier
    /// matrix; the input relation does not hold.
    KernelCheckFailed,
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::WeightNotEven(w) => write!(f, "weight {w} must be even"),
            Error::WeightNotOdd(w) => write!(f, "weight {w} must be odd"),
            Error::WeightTooSmall { weight, min } => {
                write!(f, "weight {weight} too small, need at least {min}")
            }
            Error::DegreeTooLarge { degree, target } => {
                write!(f, "degree {degree} exceeds homogenization target {target}")
            }
            Error::NotPeriodPolynomial(sign) => {
                write!(f, "polynomial is not in the {sign} period-polynomial space")
            }
            Error::NotSymmetric => write!(f, "polynomial is not symmetric"),
            Error::Divergent { name, min, got } => {
                write!(f, "argument {name}={got} diverges, need {name} >= {min}")
            }
            Error::ClassOutOfRange { index, modulus } => {
                write!(
                    f,
                    "residue class {index} out of range for modulus {modulus}"
                )
            }
            Error::PrecisionUnattainable {
                requested,
                achievable,
            } => write!(
                f,
                "cannot guarantee absolute error {requested:e}; best achievable is {achievable:e}"
            ),
            Error::ZeroRelation => write!(f, "operation requires a nonzero relation"),
            Error::KernelCheckFailed => {
                write!(f, "combined vector does not annihilate the Zagier matrix")
            }
        }
    }
}

impl core::error::Error for Error {}
