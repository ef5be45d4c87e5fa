//! Exact symbolic toolkit for Schwarzian equations `S(y) + y'²·R(y) = 0`.
//!
//! The crate decides, for coefficient functions `R` in triangular form,
//! whether the associated Riccati equation `u' + u² + R/2 = 0` can have
//! algebraic solutions. The decision uses Kimura's table of exceptional
//! parameter triples and is cross-checked by an independent search for
//! rational solutions and by a truncated Puiseux-series computation in the
//! variable `w = y'`.
//!
//! Everything is computed over ℚ; there is no floating point anywhere.

pub mod arith;
pub mod expr;
pub mod kimura;
pub mod puiseux;
pub mod report;
pub mod riccati;
pub mod schwarzian;

pub use arith::{BigRat, ExtRational, PartialFractions, Poly, RatFunc};
pub use kimura::{decide_condition_ric, KimuraVerdict, KimuraWitness};
pub use schwarzian::TriangleParams;
