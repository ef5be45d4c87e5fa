//! Truncated Puiseux series `Σ aᵢ(y)·w^{λᵢ}` in `w = y'` with coefficients in
//! ℚ(y), and the derivation they inherit from `d/dt`.
//!
//! With `u = y''/y'²` expanded as such a series `U`, the Schwarzian equation
//! becomes `u'/y' + ½u² + R(y) = 0`. Differentiating a term uses
//! `(a·w^λ)' = (∂a/∂y)·w^{λ+1} + λ·a·w^{λ-1}·y''` and the closure
//! `y'' = U·w²`. Coefficients are constant in `t`, so the `∂(a)` term of the
//! general formula vanishes.
//!
//! Series carry a cutoff: below it coefficients are unknown, not zero.
//! Every operation propagates the cutoff so no result claims more precision
//! than its inputs justify.

use std::cmp::max;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::arith::{common_denominator, fmt_rational, int, rat, BigRat, RatFunc};
use crate::riccati::{associate_riccati, half_riccati_residual};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PuiseuxError {
    #[error("leading coefficient a0 must be nonzero")]
    ZeroLeadingCoefficient,
}

/// A coefficient lookup: either known exactly or lost to truncation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Coefficient {
    Known(RatFunc),
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PuiseuxSeries {
    /// Strictly descending exponents, nonzero coefficients.
    terms: Vec<(BigRat, RatFunc)>,
    /// `None`: no unknown tail.
    cutoff: Option<BigRat>,
}

fn max_opt(a: &Option<BigRat>, b: &Option<BigRat>) -> Option<BigRat> {
    match (a, b) {
        (None, x) | (x, None) => x.clone(),
        (Some(x), Some(y)) => Some(max(x, y).clone()),
    }
}

impl PuiseuxSeries {
    pub fn zero() -> Self {
        PuiseuxSeries {
            terms: Vec::new(),
            cutoff: None,
        }
    }

    /// Build from arbitrary `(exponent, coefficient)` pairs; like exponents
    /// are merged and terms below `cutoff` discarded.
    pub fn new(terms: Vec<(BigRat, RatFunc)>, cutoff: Option<BigRat>) -> Self {
        let mut terms = terms;
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        let mut merged: Vec<(BigRat, RatFunc)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match merged.last_mut() {
                Some((le, lc)) if *le == e => *lc = &*lc + &c,
                _ => merged.push((e, c)),
            }
        }
        merged.retain(|(e, c)| !c.is_zero() && cutoff.as_ref().is_none_or(|k| e >= k));
        PuiseuxSeries { terms: merged, cutoff }
    }

    pub fn exact(terms: Vec<(BigRat, RatFunc)>) -> Self {
        PuiseuxSeries::new(terms, None)
    }

    pub fn truncated(terms: Vec<(BigRat, RatFunc)>, cutoff: BigRat) -> Self {
        PuiseuxSeries::new(terms, Some(cutoff))
    }

    /// `a·w⁰`, exact.
    pub fn constant(a: RatFunc) -> Self {
        PuiseuxSeries::exact(vec![(BigRat::zero(), a)])
    }

    pub fn terms(&self) -> &[(BigRat, RatFunc)] {
        &self.terms
    }

    pub fn cutoff(&self) -> Option<&BigRat> {
        self.cutoff.as_ref()
    }

    /// Common denominator of all exponents (and the cutoff).
    pub fn denominator(&self) -> BigInt {
        common_denominator(self.terms.iter().map(|(e, _)| e).chain(self.cutoff.iter()))
    }

    pub fn leading(&self) -> Option<(&BigRat, &RatFunc)> {
        self.terms.first().map(|(e, c)| (e, c))
    }

    /// Upper bound for the order of the series: the leading exponent, or the
    /// cutoff if nothing above it is known. `None` for the exact zero.
    fn lead_bound(&self) -> Option<BigRat> {
        self.terms
            .first()
            .map(|(e, _)| e.clone())
            .or_else(|| self.cutoff.clone())
    }

    pub fn coefficient(&self, exponent: &BigRat) -> Coefficient {
        if self.cutoff.as_ref().is_some_and(|c| exponent < c) {
            return Coefficient::Unknown;
        }
        Coefficient::Known(
            self.terms
                .iter()
                .find(|(e, _)| e == exponent)
                .map(|(_, c)| c.clone())
                .unwrap_or_else(RatFunc::zero),
        )
    }

    pub fn add(&self, other: &PuiseuxSeries) -> PuiseuxSeries {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        PuiseuxSeries::new(terms, max_opt(&self.cutoff, &other.cutoff))
    }

    pub fn neg(&self) -> PuiseuxSeries {
        PuiseuxSeries {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
            cutoff: self.cutoff.clone(),
        }
    }

    pub fn sub(&self, other: &PuiseuxSeries) -> PuiseuxSeries {
        self.add(&other.neg())
    }

    /// Product with cutoff `max(λ + c₂, μ + c₁)` for leading exponents `λ, μ`
    /// and cutoffs `c₁, c₂`.
    pub fn mul(&self, other: &PuiseuxSeries) -> PuiseuxSeries {
        let (Some(ls), Some(lo)) = (self.lead_bound(), other.lead_bound()) else {
            return PuiseuxSeries::zero();
        };
        let cutoff = max_opt(
            &other.cutoff.as_ref().map(|c| &ls + c),
            &self.cutoff.as_ref().map(|c| &lo + c),
        );
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                terms.push((e1 + e2, c1 * c2));
            }
        }
        PuiseuxSeries::new(terms, cutoff)
    }

    pub fn scale(&self, a: &RatFunc) -> PuiseuxSeries {
        if a.is_zero() {
            return PuiseuxSeries::zero();
        }
        PuiseuxSeries::new(
            self.terms.iter().map(|(e, c)| (e.clone(), c * a)).collect(),
            self.cutoff.clone(),
        )
    }

    /// Multiply by `w^δ`.
    pub fn shift(&self, delta: &BigRat) -> PuiseuxSeries {
        PuiseuxSeries {
            terms: self.terms.iter().map(|(e, c)| (e + delta, c.clone())).collect(),
            cutoff: self.cutoff.as_ref().map(|c| c + delta),
        }
    }

    /// Raise the cutoff to `c`, forgetting terms below it.
    pub fn truncate(&self, c: &BigRat) -> PuiseuxSeries {
        PuiseuxSeries::new(self.terms.clone(), max_opt(&self.cutoff, &Some(c.clone())))
    }
}

impl fmt::Display for PuiseuxSeries {
    /// `(a)·w^{λ} + … + O(w^{c})`, highest exponent first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| format!("({})·w^{{{}}}", c, fmt_rational(e)))
            .collect();
        if let Some(c) = &self.cutoff {
            parts.push(format!("O(w^{{{}}})", fmt_rational(c)));
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// The derivation on series in `w = y'`, closed by `y'' = U·w²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesContext {
    pub u: PuiseuxSeries,
}

impl SeriesContext {
    pub fn new(u: PuiseuxSeries) -> Self {
        SeriesContext { u }
    }

    /// `D(Σ aᵢw^{λᵢ}) = Σ (∂aᵢ/∂y)·w^{λᵢ+1} + (Σ λᵢaᵢw^{λᵢ})·U·w`.
    pub fn derive(&self, s: &PuiseuxSeries) -> PuiseuxSeries {
        let one = BigRat::one();
        let coeff_part = PuiseuxSeries::new(
            s.terms.iter().map(|(e, c)| (e + &one, c.derivative())).collect(),
            s.cutoff.as_ref().map(|c| c + &one),
        );
        let weighted = PuiseuxSeries::new(
            s.terms.iter().map(|(e, c)| (e.clone(), c.scale(e))).collect(),
            s.cutoff.clone(),
        );
        coeff_part.add(&weighted.mul(&self.u).shift(&one))
    }
}

/// `E(U) = D(U)/w + ½U² + R·w⁰`, the Schwarzian equation rewritten in
/// `u = y''/y'²`.
pub fn residual(u: &PuiseuxSeries, r: &RatFunc) -> PuiseuxSeries {
    let ctx = SeriesContext::new(u.clone());
    let du = ctx.derive(u).shift(&-BigRat::one());
    let half_sq = u.mul(u).scale(&RatFunc::constant(rat(1, 2)));
    du.add(&half_sq).add(&PuiseuxSeries::constant(r.clone()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstraintReport {
    /// `λ₀ ≠ 0`: the residual has a nonzero leading term, so `U` cannot
    /// solve the equation.
    Obstruction {
        lambda0: BigRat,
        exponent: BigRat,
        coefficient: RatFunc,
        /// `(λ₀ + ½)·a₀²` when `λ₀ > 0`.
        predicted: Option<RatFunc>,
    },
    /// `λ₀ ≠ 0` but no nonzero residual term lies above the cutoff.
    Undetermined { lambda0: BigRat },
    /// `λ₀ = 0`: the `w⁰` coefficient gives `∂a₀/∂y + ½a₀² + R = 0`.
    ZeroExponent {
        a0: RatFunc,
        constraint: RatFunc,
        satisfied: bool,
        /// `a₀/2`, a solution of the Riccati equation iff `satisfied`.
        half: RatFunc,
        half_solves_riccati: bool,
    },
}

impl ConstraintReport {
    pub fn is_obstruction(&self) -> bool {
        matches!(self, ConstraintReport::Obstruction { .. })
    }
}

/// Leading-order analysis for `U = a₀·w^{λ₀} + (terms below the cutoff)`.
///
/// `truncation` is lowered to `λ₀ - 1` when it is not already below `λ₀`.
pub fn leading_constraints(
    lambda0: &BigRat,
    a0: &RatFunc,
    r: &RatFunc,
    truncation: &BigRat,
) -> Result<ConstraintReport, PuiseuxError> {
    if a0.is_zero() {
        return Err(PuiseuxError::ZeroLeadingCoefficient);
    }
    let cutoff = if truncation < lambda0 {
        truncation.clone()
    } else {
        lambda0 - BigRat::one()
    };
    let u = PuiseuxSeries::truncated(vec![(lambda0.clone(), a0.clone())], cutoff);
    let e = residual(&u, r);
    if lambda0.is_zero() {
        let Coefficient::Known(constraint) = e.coefficient(&BigRat::zero()) else {
            unreachable!("cutoff is below 0");
        };
        let half = a0.scale(&rat(1, 2));
        return Ok(ConstraintReport::ZeroExponent {
            a0: a0.clone(),
            satisfied: constraint.is_zero(),
            constraint,
            half_solves_riccati: associate_riccati(r).is_solution(&half),
            half,
        });
    }
    let predicted = lambda0.is_positive().then(|| (a0 * a0).scale(&(lambda0 + rat(1, 2))));
    Ok(match e.leading() {
        Some((exponent, coefficient)) => ConstraintReport::Obstruction {
            lambda0: lambda0.clone(),
            exponent: exponent.clone(),
            coefficient: coefficient.clone(),
            predicted,
        },
        None => ConstraintReport::Undetermined {
            lambda0: lambda0.clone(),
        },
    })
}

/// `∂a₀/∂y + ½a₀² + R`, computed directly on rational functions.
pub fn zero_exponent_constraint(a0: &RatFunc, r: &RatFunc) -> RatFunc {
    half_riccati_residual(a0, r)
}

pub fn default_truncation() -> BigRat {
    int(-5)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Poly;
    use crate::schwarzian::build_triangular_r;

    fn y() -> RatFunc {
        RatFunc::x()
    }

    fn k(n: i64) -> RatFunc {
        RatFunc::constant(int(n))
    }

    fn r_one_inf_inf() -> RatFunc {
        build_triangular_r(&"1,inf,inf".parse().unwrap()).unwrap()
    }

    #[test]
    fn products() {
        let a = y();
        let b = y() + k(2);
        let s = PuiseuxSeries::constant(a.clone());
        let t = PuiseuxSeries::constant(b.clone());
        assert_eq!(s.mul(&t), PuiseuxSeries::constant(&a * &b));
        let w_inv = PuiseuxSeries::exact(vec![(int(-1), RatFunc::one())]);
        assert_eq!(w_inv.mul(&w_inv), PuiseuxSeries::exact(vec![(int(-2), RatFunc::one())]));
        // (a0 + a1 w^{-1/2})^2
        let (a0, a1) = (y(), y() * y() - k(1));
        let s = PuiseuxSeries::exact(vec![(int(0), a0.clone()), (rat(-1, 2), a1.clone())]);
        let sq = s.mul(&s);
        let expected = PuiseuxSeries::exact(vec![
            (int(0), &a0 * &a0),
            (rat(-1, 2), (&a0 * &a1).scale(&int(2))),
            (int(-1), &a1 * &a1),
        ]);
        assert_eq!(sq, expected);
        assert_eq!(sq.denominator(), BigInt::from(2));
    }

    #[test]
    fn product_cutoff_rule() {
        let s = PuiseuxSeries::truncated(vec![(int(1), y())], int(-2));
        let t = PuiseuxSeries::truncated(vec![(int(0), k(3))], rat(-1, 2));
        let p = s.mul(&t);
        // max(1 - 1/2, 0 - 2) = 1/2
        assert_eq!(p.cutoff(), Some(&rat(1, 2)));
        assert_eq!(p.coefficient(&int(1)), Coefficient::Known(y().scale(&int(3))));
        assert_eq!(p.coefficient(&int(0)), Coefficient::Unknown);
    }

    #[test]
    fn derivation_basics() {
        let ctx = SeriesContext::new(PuiseuxSeries::truncated(vec![(int(0), y())], int(-3)));
        assert_eq!(ctx.derive(&PuiseuxSeries::constant(k(7))), PuiseuxSeries::zero());
        let a = y() * y();
        let d = ctx.derive(&PuiseuxSeries::constant(a.clone()));
        assert_eq!(d, PuiseuxSeries::exact(vec![(int(1), a.derivative())]));
    }

    #[test]
    fn residual_trivial_and_zero_exponent() {
        assert_eq!(
            residual(&PuiseuxSeries::zero(), &RatFunc::zero()),
            PuiseuxSeries::zero()
        );
        let r = r_one_inf_inf();
        let a0 = y().recip().unwrap() + (y() - k(1)).recip().unwrap();
        let u = PuiseuxSeries::truncated(vec![(int(0), a0)], int(-4));
        let e = residual(&u, &r);
        assert!(e.terms().iter().all(|(ex, _)| ex.is_negative()));
        assert_eq!(e.coefficient(&int(0)), Coefficient::Known(RatFunc::zero()));
    }

    #[test]
    fn leading_balance_lambda_one() {
        let u = PuiseuxSeries::truncated(vec![(int(1), RatFunc::one())], int(-3));
        let e = residual(&u, &y());
        assert_eq!(e.coefficient(&int(2)), Coefficient::Known(RatFunc::constant(rat(3, 2))));
    }

    #[test]
    fn constraint_reports() {
        let r = r_one_inf_inf();
        let a0 = y().recip().unwrap() + (y() - k(1)).recip().unwrap();
        let rep = leading_constraints(&int(0), &a0, &r, &default_truncation()).unwrap();
        let ConstraintReport::ZeroExponent {
            satisfied,
            half_solves_riccati,
            half,
            ..
        } = rep
        else {
            panic!("expected zero-exponent report");
        };
        assert!(satisfied && half_solves_riccati);
        assert_eq!(half, a0.scale(&rat(1, 2)));

        let rep = leading_constraints(&rat(1, 2), &RatFunc::one(), &r, &default_truncation()).unwrap();
        let ConstraintReport::Obstruction {
            exponent,
            coefficient,
            predicted,
            ..
        } = rep
        else {
            panic!("expected obstruction");
        };
        assert_eq!(exponent, int(1));
        assert_eq!(coefficient, RatFunc::one());
        assert_eq!(predicted, Some(RatFunc::one()));

        assert_eq!(
            leading_constraints(&int(0), &RatFunc::zero(), &r, &default_truncation()),
            Err(PuiseuxError::ZeroLeadingCoefficient)
        );
    }

    #[test]
    fn negative_lambda_is_obstructed_by_r() {
        let r = r_one_inf_inf();
        let rep = leading_constraints(&int(-1), &y(), &r, &default_truncation()).unwrap();
        let ConstraintReport::Obstruction {
            exponent,
            coefficient,
            predicted,
            ..
        } = rep
        else {
            panic!("expected obstruction");
        };
        assert_eq!(exponent, int(0));
        assert_eq!(coefficient, r);
        assert_eq!(predicted, None);
    }

    #[test]
    fn display_form() {
        let s = PuiseuxSeries::truncated(
            vec![(int(0), y()), (rat(-1, 2), RatFunc::from_poly(Poly::from_i64(&[1, 1])))],
            int(-2),
        );
        assert_eq!(s.to_string(), "(y)·w^{0} + (y + 1)·w^{-1/2} + O(w^{-2})");
        assert_eq!(PuiseuxSeries::zero().to_string(), "0");
    }
}
