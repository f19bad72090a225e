use alloc::string::String;
use core::fmt;

use num_bigint::BigInt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Series inversion needs a constant term of 1 or -1.
    NonUnitConstant { constant: BigInt },
    /// A coefficient past the truncation order was requested.
    BeyondOrder { degree: usize, order: usize },
    /// Dividing by `q^shift` would discard a nonzero coefficient.
    NonzeroBelowShift { degree: usize, shift: usize },
    /// A residue pair `(R, S)` outside the range the construction admits.
    ResidueRange { r: u32, s: u32, expected: &'static str },
    /// A parameter that must be at least one was zero.
    ZeroParameter { name: &'static str },
    /// Part sequence that is not a partition.
    NotAPartition { parts: alloc::vec::Vec<usize> },
    /// Partition weight disagrees with the ambient weight and index.
    WeightMismatch { expected: i64, actual: usize },
    /// The involution is undefined on the empty partition at index 0.
    EmptyAtIndexZero,
    /// `psi` needs `rank <= -3k` on a nonempty partition.
    RankConstraint { rank: i64, bound: i64 },
    /// An exponent fell below zero where a power series was required.
    NegativeExponent { exponent: i64 },
    /// Anything else a caller supplied that makes no sense.
    Invalid(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonUnitConstant { constant } => {
                write!(f, "cannot invert series with constant term {constant} (need 1 or -1)")
            }
            Error::BeyondOrder { degree, order } => write!(
                f,
                "coefficient of q^{degree} is unknown: series is only valid to order {order}"
            ),
            Error::NonzeroBelowShift { degree, shift } => write!(
                f,
                "cannot divide by q^{shift}: coefficient of q^{degree} is nonzero"
            ),
            Error::ResidueRange { r, s, expected } => {
                write!(f, "invalid residue pair R={r}, S={s}: need {expected}")
            }
            Error::ZeroParameter { name } => write!(f, "parameter {name} must be at least 1"),
            Error::NotAPartition { parts } => {
                write!(f, "{parts:?} is not a non-increasing sequence of positive integers")
            }
            Error::WeightMismatch { expected, actual } => write!(
                f,
                "partition has weight {actual} but the index requires weight {expected}"
            ),
            Error::EmptyAtIndexZero => {
                f.write_str("phi is undefined on the empty partition at index 0 (n = 0)")
            }
            Error::RankConstraint { rank, bound } => write!(
                f,
                "psi needs a nonempty partition with rank <= {bound}, got rank {rank}"
            ),
            Error::NegativeExponent { exponent } => {
                write!(f, "exponent {exponent} is negative; result is not a power series")
            }
            Error::Invalid(msg) => f.write_str(msg),
        }
    }
}

impl core::error::Error for Error {}
