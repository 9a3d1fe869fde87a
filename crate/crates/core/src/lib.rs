//! Exact construction and verification of rime R-matrices and related structures.
//!
//! Every object is built over arbitrary-precision rationals, and every identity is checked
//! as an exactly vanishing residual.

pub mod bezout;
pub mod blocks;
pub mod cg;
pub mod classical;
pub mod error;
pub mod kernel;
pub mod poisson;
pub mod qalg;
pub mod rime;
pub mod suite;
pub mod tensor;

pub use error::{Error, Result};
pub use kernel::{Matrix, Rational, RationalVector};
pub use tensor::{Leg, Legs, Operator1, Operator2, Operator3};
