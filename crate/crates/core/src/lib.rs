//! Graded Frobenius characteristics of Δ-Springer varieties.
//!
//! Three independent routes to the same symmetric function:
//!
//! * [`fillings::frob_delta`] sums `q^dinv` over partial row-decreasing fillings,
//! * [`hlexp::hl_rhs`] expands into modified Hall–Littlewood functions with q-binomial weights,
//! * [`fqgeom`] counts `F_p`-points of the projected varieties by brute force.
//!
//! Polynomial coefficients are generic over the ring (`BigInt` by default, see the aliases
//! below); point counts are plain integers.

pub mod budget;
pub mod diagrams;
pub mod error;
pub mod fillings;
pub mod fqgeom;
pub mod hlexp;
pub mod qcore;
pub mod symfunc;
pub mod verify;

pub use budget::Budget;
pub use diagrams::{Cell, DeltaInstance, Filling};
pub use error::{Error, Result};
pub use qcore::{Coeff, Composition, Partition, Poly};
pub use symfunc::{Basis, SymmetricFunction};

/// Arbitrary-precision integer coefficients.
pub type Int = num_bigint::BigInt;

/// Polynomial in `q` with arbitrary-precision integer coefficients.
pub type QPoly = Poly<Int>;
/// Polynomial in `q` with machine-word coefficients, for small cross-checks.
pub type QPoly64 = Poly<i64>;
/// Symmetric function with `QPoly` coefficients.
pub type SymFunc = SymmetricFunction<Int>;
/// Symmetric function with machine-word coefficients.
pub type SymFunc64 = SymmetricFunction<i64>;
