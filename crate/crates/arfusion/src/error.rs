use alloc::string::String;
use core::fmt;

/// Errors reported by the exact fusion computations.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An enumeration or table would exceed the configured capacity.
    Capacity { needed: u128, limit: u128 },
    /// An argument violates a documented precondition.
    InvalidArgument(String),
    /// A Verlinde sum failed the integrality residual check; this signals a
    /// numeric or normalization bug, not a property of the algebra.
    IntegralityViolation { residual: f64 },
    /// The numeric normalization assertion on a freshly built table failed.
    Normalization { residual: f64 },
    /// No weight matches a Galois-transformed eigenvalue signature.
    NoGaloisMatch { ell: u64 },
    /// A constructive zero recipe failed one of its bounds.
    BoundViolation(String),
    /// The requested analysis is outside the supported parameter range.
    OutOfScope(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Capacity { needed, limit } => {
                write!(f, "capacity exceeded: needed {needed}, limit {limit}")
            }
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::IntegralityViolation { residual } => write!(
                f,
                "fusion coefficient failed integrality check (residual {residual:.3e})"
            ),
            Error::Normalization { residual } => write!(
                f,
                "S-matrix normalization check failed (row-norm residual {residual:.3e})"
            ),
            Error::NoGaloisMatch { ell } => {
                write!(f, "no weight matches the sigma_{ell} image signature")
            }
            Error::BoundViolation(msg) => write!(f, "bound violation: {msg}"),
            Error::OutOfScope(msg) => write!(f, "out of scope: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
