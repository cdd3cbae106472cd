//! Exact computations in the fusion algebras of the affine algebras `A_r`
//! at positive integer level `k`.
//!
//! The crate evaluates fusion eigenvalues (ratios of modular `S`-matrix
//! entries) in exact cyclotomic arithmetic, assembles the numeric `S`
//! matrix, computes Verlinde fusion coefficients, analyses fixed points of
//! the simple current and their factorisation into smaller-rank data,
//! searches for minimal fusion-generating sets, tests invertibility of the
//! fundamental fusion matrix, and identifies the number fields generated by
//! the `S` entries and the fusion eigenvalues.
//!
//! All zero/nonzero decisions that feed the structural results are made on
//! canonical cyclotomic forms, never by floating-point tolerance. Floats
//! appear only in the numeric `S` matrix, Verlinde sums (with strict
//! integrality checking) and quantum dimensions.
//!
//! The crate is `no_std`-compatible (with `alloc`); the default `std`
//! feature additionally enables a process-wide cache of per-order
//! cyclotomic reduction data.

#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

mod error;

pub mod characters;
pub mod cyclotomic;
pub mod fixed_points;
pub mod fusion;
pub mod galois;
pub mod generators;
pub mod weights;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

/// Guards against runaway enumeration and table sizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CapacityLimits {
    /// Maximum number of weights a single enumeration may produce.
    pub max_weights: u64,
    /// Maximum byte size of an exact character-table arena.
    pub max_table_bytes: u64,
}

impl CapacityLimits {
    /// The scans in this crate were sized against grids whose largest cells
    /// stay well below this bound.
    pub const DEFAULT_MAX_WEIGHTS: u64 = 500_000;
    /// Two GiB of table arena.
    pub const DEFAULT_MAX_TABLE_BYTES: u64 = 2 << 30;

    pub fn new(max_weights: u64, max_table_bytes: u64) -> Self {
        CapacityLimits {
            max_weights,
            max_table_bytes,
        }
    }
}

impl Default for CapacityLimits {
    fn default() -> Self {
        CapacityLimits {
            max_weights: Self::DEFAULT_MAX_WEIGHTS,
            max_table_bytes: Self::DEFAULT_MAX_TABLE_BYTES,
        }
    }
}
