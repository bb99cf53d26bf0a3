//! Exact coefficients, the Weyl-ordered quantum torus and its Ore localization.

mod coefficient;
mod ore;
mod ring;
mod torus;

pub use coefficient::{rational_to_f64, Coefficient, ParamMonomial, ParamValues, Rational};
pub use ore::{ore_mul, ore_zero_test, OreElement, OreRing, OreTerm, QDenominator};
pub use ring::{Ring, ScalarRing};
pub use torus::{
    even_check, fmt_monomial, torus_mul, torus_star, SkewForm, TorusElement, TorusMonomial,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QringError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("skew form is not antisymmetric at ({0}, {1})")]
    NotAntisymmetric(usize, usize),
    #[error("skew form entry ({0}, {1}) = {2} outside -2..=2")]
    EntryOutOfRange(usize, usize, i32),
    #[error("bad shape: {0}")]
    Shape(String),
    #[error("bad denominator: {0}")]
    Denominator(String),
}
