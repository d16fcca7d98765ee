//! Exact integer polynomials and reduced rational generating functions.

mod poly;
mod rational;

pub(crate) use poly::bigint_to_f64;
pub use poly::IntPoly;
pub use rational::{series_coeffs, RationalGF};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomial division leaves a nonzero remainder")]
    NotDivisible,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("denominator has zero constant term")]
    ZeroDenominatorConstant,
    /// After removing common factors the denominator's constant term is not
    /// a unit, so the power series would not have integer coefficients.
    #[error("reduced denominator has constant term {0}, which is not a unit")]
    NonUnitDenominatorConstant(num_bigint::BigInt),
}
