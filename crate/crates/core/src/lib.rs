//! Exact construction of the generalized equidistant Chebyshev polynomials
//! `T^(k,h)_n`, Alexander invariants of torus knots and links, and the
//! substitution identities connecting the two.

pub mod alexander;
pub mod bridge;
pub mod chebgen;
pub mod cli;
pub mod error;
pub mod format;
pub mod laurent;
pub mod ratpoly;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
pub use laurent::LaurentPoly;
pub use ratpoly::{Degree, Polynomial, Rational};
pub use report::VerificationReport;
