//! Exact rational numbers and dense univariate polynomials over them.

mod numeric;
mod polynomial;
mod rational;

pub(crate) use numeric::compensated_horner as compensated_eval;
pub use polynomial::{Degree, Polynomial};
pub use rational::Rational;
