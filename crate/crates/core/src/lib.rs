//! Rationalizing transformations for square roots, nested integrals and
//! nested sums, with exact verification.

pub mod algebra;
pub mod catalog;
pub mod error;
pub mod format;
pub mod integrals;
pub mod parser;
pub mod radicands;
pub mod sqrt_expr;
pub mod sums;
pub mod verifier;

pub use error::{Error, Result};
