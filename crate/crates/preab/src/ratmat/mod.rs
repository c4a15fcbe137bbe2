//! Exact rational linear algebra.
//!
//! Everything in the crate reduces to row operations over `BigRational`.
//! There are no tolerances anywhere: equality of morphisms is literal
//! equality of reduced fractions, which is what makes categorical
//! statements decidable here.

mod matrix;
mod scalar;
mod subspace;

pub use matrix::{Matrix, NoSolution};
pub use scalar::{format_scalar, parse_scalar, rat, sca, Scalar};
pub use subspace::Subspace;
