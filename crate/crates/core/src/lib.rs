//! Exact combinatorics of bounded lattice paths and their algebraic models.
//!
//! The crate has three layers that check each other:
//!
//! * counting — brute-force path enumerators ([`pathlab`]) against
//!   reflection-principle alternating sums ([`reflection`]) over Pascal-style
//!   triangles ([`triangles`]);
//! * algebra — chain complexes over the quantum exterior algebra at a root
//!   of unity ([`qcomplex`]), whose Euler characteristics reproduce the
//!   alternating sums and whose homology concentrates in one degree;
//! * q-deformation — Gaussian binomials, q-Catalan numbers and modified
//!   Euler characteristics weighted by quadratic exponent functions, which
//!   produce q-Fibonacci values for the right exponents.
//!
//! Everything is exact: big integers, integer Laurent polynomials in q, and
//! cyclotomic field elements ([`exactnum`]). [`propcheck`] sweeps parameter
//! grids and emits machine-readable verification reports.

pub mod error;
pub mod exactnum;
pub mod pathlab;
pub mod propcheck;
pub mod qcomplex;
pub mod reflection;
pub mod triangles;

pub use error::{Error, Result};
pub use exactnum::{CycloNumber, Integer, LaurentPoly, Rational};
pub use pathlab::{BoundSpec, ContactPolicy, GenPathSpec};
pub use qcomplex::{ChainComplex, ExponentFn};
pub use reflection::AltSumSpec;
pub use triangles::TriangleRow;

/// Serde helper: big integers as decimal strings, never floats.
pub(crate) fn serialize_integer<S>(v: &Integer, ser: S) -> std::result::Result<S::Ok, S::Error>
where
    S: serde::Serializer,
{
    ser.serialize_str(&v.to_string())
}
