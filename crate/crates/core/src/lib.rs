//! Exact Clebsch-Gordan decompositions of finite collections of SU(2) spins.
//!
//! Spins are stored in twice-spin units (`2j`), so half-integer spins never
//! need fractions. The multiplicity tables are computed three independent
//! ways (a generating-function product, an alternating binomial sum, and a
//! multi-restricted composition count) and every fast path has a brute-force
//! counterpart in [`oracle`].
//!
//! The polynomial and series machinery is generic over its coefficient type
//! (see [`scalar`]); the aliases below fix the exact types the rest of the
//! crate works with.

pub mod apps;
pub mod cgd;
pub mod cli;
pub mod error;
pub mod oracle;
pub mod qpoly;
pub mod scalar;
pub mod spinset;
pub mod symcomp;

pub use error::{Error, Result};

/// Dense polynomial in `q` with arbitrary-precision integer coefficients.
pub type IntPolynomial = qpoly::Polynomial<num_bigint::BigInt>;

/// Exact rational number.
pub type Rational = num_rational::BigRational;

/// Nonnegative partition count.
pub type PartitionCount = num_bigint::BigUint;

pub use cgd::{DecompositionTable, Method, OmegaTable};
pub use spinset::{SpinMultiset, TwiceSpin};
pub use symcomp::IdenticalSystem;
