//! Exact enumeration of standard Young tableaux of skew shape, and of
//! tableaux that contain a fixed subtableau.
//!
//! Every count is computed in arbitrary precision, and every closed formula
//! is paired with an independent route (brute force, a determinant, or a
//! second formula) so that the two can be checked against each other.
//!
//! The symmetric-function evaluators and determinant are generic over a
//! [`Scalar`]; the asymptotic estimators are generic over
//! [`num_traits::Float`]. The aliases below fix the exact types used
//! everywhere else.

pub mod asymptotics;
pub mod characters;
pub mod containment;
mod error;
pub mod partitions;
pub mod scalar;
pub mod sequences;
pub mod skew_count;

pub use error::{Error, Result};
pub use partitions::{Partition, SkewShape};
pub use scalar::Scalar;

/// Arbitrary-precision integer used for every count.
pub type Int = num_bigint::BigInt;

/// Exact rational used for every coefficient and probability.
pub type Rat = num_rational::BigRational;

/// Double-precision scalar used by the asymptotic estimators.
pub type Real = f64;
