//! Cartan data derived from quivers with compatible automorphism, and the
//! Q- and P-polynomial matrices.

mod datum;
mod fixtures;
mod quiver;
pub mod random;
mod skewpoly;
mod weight;

pub use datum::{QViolation, RootDatum};
pub use fixtures::{all_builtins, C6_VIOLATING, builtin, builtin_names, builtin_source, parse_quiver_json};
pub use quiver::{Quiver, QuiverInput};
pub use skewpoly::SkewBivarPoly;
pub use weight::{enumerate_sequences, Weight};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootDataError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("incompatible automorphism: {0}")]
    IncompatibleAutomorphism(String),
    #[error("C4 violated: {0}")]
    C4Violation(String),
    #[error("C6 violated: {0}")]
    C6Violation(String),
    #[error("gcd of the symmetrizing constants is {0}, not 1")]
    GcdNotOne(u32),
    #[error("condition violated: {0}")]
    ConditionViolated(String),
}

#[cfg(test)]
pub(crate) mod tests;
