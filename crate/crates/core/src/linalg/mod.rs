//! Exact linear algebra over the rationals: scalars, dense matrices,
//! canonical subspaces, characteristic polynomials.

mod matrix;
mod poly;
mod rational;
mod subspace;

pub use matrix::{discriminant_2x2, is_zero_vector, unit_vector, zero_vector, Matrix, Vector};
pub(crate) use matrix::{axpy, scaled, vadd};
pub use poly::Polynomial;
pub use rational::{format_rational, int, one, parse_rational, rat, zero, Rational};
pub use subspace::Subspace;
