//! Exact truncated q-series and partition combinatorics.
//!
//! Everything here works over arbitrary-precision integers with an explicit
//! truncation order, so every equality or nonnegativity verdict is exact:
//!
//! - [`qseries`]: the truncated power-series ring ([`IntSeries`]), q-Pochhammer
//!   products, bilateral theta sums and the Lambert divisor series.
//! - [`partitions`]: enumeration, `p(n)`, Dyson rank, conjugation, the
//!   rank-filtered sets `A_j^(1)`, `A_j^(2)` and the `M_k(n)` count.
//! - [`bijections`]: the sign-reversing involution and the conjugation
//!   injection `psi`, with exhaustive checkers.
//! - [`trunclab`]: both sides of the truncated identities and the
//!   nonnegativity checks built on them.
//! - [`report`]: the [`CheckReport`] verdict shared by all checkers.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod bijections;
mod error;
pub mod partitions;
pub mod qseries;
pub mod report;
pub mod trunclab;

pub use error::Error;
pub use partitions::Partition;
pub use qseries::{IntSeries, QPolynomial};
pub use report::{CheckReport, Params, Violation, Witness};
pub use trunclab::TruncParams;

pub type Result<T, E = Error> = core::result::Result<T, E>;
