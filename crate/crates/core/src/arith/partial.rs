use num_traits::Zero;

use super::poly::Poly;
use super::ratfunc::RatFunc;
use super::rational::BigRat;
use super::ArithError;

/// One summand `coefficient / (y - pole)^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoleTerm {
    pub pole: BigRat,
    pub order: usize,
    pub coefficient: BigRat,
}

/// Partial-fraction decomposition over ℚ.
///
/// Terms are sorted by pole, then by decreasing order; zero coefficients are
/// omitted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialFractions {
    pub polynomial: Poly,
    pub terms: Vec<PoleTerm>,
}

impl PartialFractions {
    pub fn recombine(&self) -> RatFunc {
        self.terms
            .iter()
            .fold(RatFunc::from_poly(self.polynomial.clone()), |acc, t| {
                acc + RatFunc::pole_term(&t.coefficient, &t.pole, t.order as u32)
            })
    }

    /// Coefficient of `(y - pole)^{-order}`, zero when absent.
    pub fn coefficient(&self, pole: &BigRat, order: usize) -> BigRat {
        self.terms
            .iter()
            .find(|t| &t.pole == pole && t.order == order)
            .map(|t| t.coefficient.clone())
            .unwrap_or_else(BigRat::zero)
    }

    /// Distinct poles with their multiplicity in the denominator.
    pub fn poles(&self) -> Vec<(BigRat, usize)> {
        let mut out: Vec<(BigRat, usize)> = Vec::new();
        for t in &self.terms {
            match out.last_mut() {
                Some((p, k)) if *p == t.pole => *k = (*k).max(t.order),
                _ => out.push((t.pole.clone(), t.order)),
            }
        }
        out
    }
}

/// Decompose `r` into a polynomial part plus simple terms at rational poles.
pub fn partial_fractions(r: &RatFunc) -> Result<PartialFractions, ArithError> {
    let (polynomial, rem) = r.num().div_rem(r.den())?;
    let (_, roots) = r
        .den()
        .split_linear()
        .ok_or_else(|| ArithError::NotSplitOverRationals(r.den().to_string()))?;
    let mut terms = Vec::new();
    for (pole, mult) in &roots {
        let cofactor = r.den().exact_div(&Poly::linear_root(pole).pow(*mult as u32))?;
        // Taylor coefficients of rem/cofactor at the pole, in t = y - pole.
        let a = rem.taylor(pole, *mult);
        let b = cofactor.taylor(pole, *mult);
        let b0 = b[0].clone();
        let mut series: Vec<BigRat> = Vec::with_capacity(*mult);
        for n in 0..*mult {
            let mut s = a[n].clone();
            for i in 1..=n {
                s -= &b[i] * &series[n - i];
            }
            series.push(s / &b0);
        }
        for (n, coefficient) in series.into_iter().enumerate() {
            if !coefficient.is_zero() {
                terms.push(PoleTerm {
                    pole: pole.clone(),
                    order: mult - n,
                    coefficient,
                });
            }
        }
    }
    Ok(PartialFractions { polynomial, terms })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{int, rat};

    #[test]
    fn textbook_split() {
        let r = RatFunc::new(Poly::one(), Poly::from_i64(&[0, -1, 1])).unwrap();
        let pf = partial_fractions(&r).unwrap();
        assert_eq!(pf.polynomial, Poly::zero());
        assert_eq!(pf.coefficient(&int(0), 1), int(-1));
        assert_eq!(pf.coefficient(&int(1), 1), int(1));
        assert_eq!(pf.recombine(), r);
    }

    #[test]
    fn double_poles() {
        let den = &Poly::from_i64(&[0, 0, 2]) * &Poly::from_i64(&[-1, 1]).pow(2);
        let r = RatFunc::new(Poly::one(), den).unwrap();
        let pf = partial_fractions(&r).unwrap();
        let expected = vec![
            PoleTerm {
                pole: int(0),
                order: 2,
                coefficient: rat(1, 2),
            },
            PoleTerm {
                pole: int(0),
                order: 1,
                coefficient: int(1),
            },
            PoleTerm {
                pole: int(1),
                order: 2,
                coefficient: rat(1, 2),
            },
            PoleTerm {
                pole: int(1),
                order: 1,
                coefficient: int(-1),
            },
        ];
        assert_eq!(pf.terms, expected);
        assert_eq!(pf.recombine(), r);
        assert_eq!(pf.poles(), vec![(int(0), 2), (int(1), 2)]);
    }

    #[test]
    fn irreducible_quadratic_rejected() {
        let r = RatFunc::new(Poly::one(), Poly::from_i64(&[1, 0, 1])).unwrap();
        assert!(matches!(
            partial_fractions(&r),
            Err(ArithError::NotSplitOverRationals(_))
        ));
    }

    #[test]
    fn polynomial_part_kept() {
        // (y^3 + 1)/(y - 2) = y^2 + 2y + 4 + 9/(y - 2)
        let r = RatFunc::new(Poly::from_i64(&[1, 0, 0, 1]), Poly::from_i64(&[-2, 1])).unwrap();
        let pf = partial_fractions(&r).unwrap();
        assert_eq!(pf.polynomial, Poly::from_i64(&[4, 2, 1]));
        assert_eq!(pf.coefficient(&int(2), 1), int(9));
        assert_eq!(pf.recombine(), r);
    }
}
