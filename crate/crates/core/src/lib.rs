//! Generalized cactus groups over Coxeter systems.
//!
//! The crate covers the word problem in the cactus group `C_W` (via its
//! embedding into a semidirect product of a right-angled Coxeter group with
//! `W`) and exact linear representations of `C_W` over the real cyclotomic
//! field.

pub mod cactus;
pub mod coxeter;
pub mod error;
pub mod linalg;
pub mod racg;
pub mod rep;
pub mod scalar;

pub use coxeter::{CoxeterSystem, FiniteCoxeterGroup, GroupElement, Subset};
pub use error::{Error, Result};
pub use linalg::Matrix;
pub use scalar::{CycloReal, Rational, Scalar, Sign};

pub type RationalMatrix = Matrix<Rational>;
pub type CycloMatrix = Matrix<CycloReal>;
pub type FloatMatrix = Matrix<f64>;
