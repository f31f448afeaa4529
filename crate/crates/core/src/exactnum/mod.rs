//! Exact number systems: arbitrary-precision integers, Laurent polynomials
//! in the formal variable q, and arithmetic in the cyclotomic fields
//! Q[q]/Phi_N(q).
//!
//! Every value is immutable after construction and every operation is a
//! pure function, so the whole module is safe to use from multiple threads.

mod cyclo;
mod laurent;

pub use cyclo::{cyclotomic_polynomial, euler_phi, CycloNumber};
pub use laurent::LaurentPoly;

/// Arbitrary-precision signed integer. All counts in this crate are exact.
pub type Integer = num_bigint::BigInt;

/// Arbitrary-precision rational, used for coefficients inside [`CycloNumber`]
/// where Gaussian elimination needs exact division.
pub type Rational = num_rational::BigRational;
