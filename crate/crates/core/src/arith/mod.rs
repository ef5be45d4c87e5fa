//! Exact arithmetic over ℚ: rationals extended by ∞, dense univariate
//! polynomials, canonical rational functions and partial fractions.

mod partial;
mod poly;
mod ratfunc;
mod rational;
mod roots;

pub use partial::{partial_fractions, PartialFractions, PoleTerm};
pub use poly::{Degree, Poly};
pub use ratfunc::RatFunc;
pub use rational::{
    common_denominator, fmt_rational, frac, int, is_integer, parse_rational, rat, rational_sqrt, BigRat, ExtRational,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomial division is not exact")]
    InexactDivision,
    #[error("evaluation at a pole (y = {0})")]
    PoleEvaluation(String),
    #[error("zero has no inverse")]
    ZeroInverse,
    #[error("denominator {0} does not split into linear factors over the rationals")]
    NotSplitOverRationals(String),
    #[error("not a rational number: {0:?}")]
    BadRational(String),
}
