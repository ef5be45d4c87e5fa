use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::poly::Poly;
use super::rational::{fmt_rational, BigRat};
use super::ArithError;

/// Rational function over ℚ in lowest terms with a monic denominator.
///
/// The representation is canonical, so derived equality is mathematical
/// equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self, ArithError> {
        if den.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFunc::zero());
        }
        let g = num.gcd(&den);
        let num = num.exact_div(&g)?;
        let den = den.exact_div(&g)?;
        let lc = den.leading().recip();
        Ok(RatFunc {
            num: num.scale(&lc),
            den: den.scale(&lc),
        })
    }

    /// Build from a numerator and denominator already known to be coprime;
    /// only the monic normalization is applied.
    pub fn from_coprime(num: Poly, den: Poly) -> Self {
        debug_assert!(num.is_zero() || num.gcd(&den).is_constant(), "factors not coprime");
        if num.is_zero() {
            return RatFunc::zero();
        }
        let lc = den.leading().recip();
        RatFunc {
            num: num.scale(&lc),
            den: den.scale(&lc),
        }
    }

    pub fn zero() -> Self {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        RatFunc::constant(BigRat::one())
    }

    pub fn constant(c: BigRat) -> Self {
        RatFunc::from_poly(Poly::constant(c))
    }

    pub fn x() -> Self {
        RatFunc::from_poly(Poly::x())
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    /// `c / (y - pole)^order`.
    pub fn pole_term(c: &BigRat, pole: &BigRat, order: u32) -> Self {
        RatFunc::new(Poly::constant(c.clone()), Poly::linear_root(pole).pow(order)).expect("nonzero denominator")
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn as_constant(&self) -> Option<BigRat> {
        self.is_constant().then(|| self.num.coeff(0))
    }

    pub fn scale(&self, c: &BigRat) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero();
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn recip(&self) -> Result<RatFunc, ArithError> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<RatFunc, ArithError> {
        Ok(self * &rhs.recip()?)
    }

    pub fn pow(&self, e: i32) -> Result<RatFunc, ArithError> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        let k = e.unsigned_abs();
        Ok(RatFunc {
            num: base.num.pow(k),
            den: base.den.pow(k),
        })
    }

    /// Formal derivative `(n'd - nd')/d²`.
    pub fn derivative(&self) -> RatFunc {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        RatFunc::new(n, self.den.pow(2)).expect("nonzero denominator")
    }

    pub fn eval(&self, x: &BigRat) -> Result<BigRat, ArithError> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(ArithError::PoleEvaluation(fmt_rational(x)));
        }
        Ok(self.num.eval(x) / d)
    }

    /// `self(inner)`. Fails when `inner` maps identically onto a pole.
    pub fn compose(&self, inner: &RatFunc) -> Result<RatFunc, ArithError> {
        let n = self.num.deg().unwrap_or(0).max(self.den.deg().unwrap_or(0));
        let homogenize = |p: &Poly| {
            let mut acc = Poly::zero();
            for (i, c) in p.coeffs().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let term = &inner.num.pow(i as u32) * &inner.den.pow((n - i) as u32);
                acc = &acc + &term.scale(c);
            }
            acc
        };
        RatFunc::new(homogenize(&self.num), homogenize(&self.den))
    }

    /// Multiplicity of `c` as a pole (0 when `c` is not a pole).
    pub fn pole_order(&self, c: &BigRat) -> usize {
        let lin = Poly::linear_root(c);
        let mut d = self.den.clone();
        let mut k = 0;
        while let Ok(q) = d.exact_div(&lin) {
            if d.is_constant() {
                break;
            }
            d = q;
            k += 1;
        }
        k
    }

    /// `deg den - deg num`, the order of vanishing at ∞ (`None` for zero).
    pub fn order_at_infinity(&self) -> Option<i64> {
        let n = self.num.deg()? as i64;
        Some(self.den.deg().expect("nonzero") as i64 - n)
    }

    /// `lim_{y→∞} y^k · self`, provided the limit is finite.
    pub fn limit_at_infinity_scaled(&self, k: i64) -> Option<BigRat> {
        match self.order_at_infinity() {
            None => Some(BigRat::zero()),
            Some(ord) if ord > k => Some(BigRat::zero()),
            Some(ord) if ord == k => Some(self.num.leading() / self.den.leading()),
            Some(_) => None,
        }
    }

    /// Render with `var` as the indeterminate. Denominators that split over ℚ
    /// are shown factored; the output parses back to the same function.
    pub fn fmt_in(&self, var: &str) -> String {
        if self.den.is_constant() {
            return self.num.fmt_in(var);
        }
        let num = if self.num.is_constant() {
            self.num.fmt_in(var)
        } else {
            format!("({})", self.num.fmt_in(var))
        };
        let den = match self.den.split_linear() {
            Some((_, roots)) => {
                let factors: Vec<String> = roots
                    .iter()
                    .map(|(c, k)| {
                        let base = if c.is_zero() {
                            var.to_string()
                        } else if c.is_negative() {
                            format!("({var} + {})", fmt_rational(&-c))
                        } else {
                            format!("({var} - {})", fmt_rational(c))
                        };
                        if *k == 1 {
                            base
                        } else {
                            format!("{base}^{k}")
                        }
                    })
                    .collect();
                if factors.len() == 1 && !factors[0].contains('^') {
                    factors[0].clone()
                } else {
                    format!("({})", factors.join("*"))
                }
            }
            None => format!("({})", self.den.fmt_in(var)),
        };
        format!("{num}/{den}")
    }
}

impl From<Poly> for RatFunc {
    fn from(p: Poly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;

    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den.clone()).expect("nonzero");
        }
        let n = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFunc::new(n, &self.den * &rhs.den).expect("nonzero")
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;

    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;

    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;

    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc {
                (&self).$m(rhs)
            }
        }
        impl $tr<RatFunc> for &RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                self.$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for RatFunc {
    type Output = RatFunc;

    fn neg(self) -> RatFunc {
        -&self
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_in("y"))
    }
}
