use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{fmt_rational, rational_sqrt, BigRat};
use super::roots::squarefree_rational_roots;
use super::ArithError;

/// Degree of a polynomial; the zero polynomial has degree `-∞`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl PartialOrd for Degree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Degree {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Degree::NegInfinity, Degree::NegInfinity) => Ordering::Equal,
            (Degree::NegInfinity, _) => Ordering::Less,
            (_, Degree::NegInfinity) => Ordering::Greater,
            (Degree::Finite(a), Degree::Finite(b)) => a.cmp(b),
        }
    }
}

impl Add for Degree {
    type Output = Degree;

    fn add(self, rhs: Degree) -> Degree {
        match (self, rhs) {
            (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a + b),
            _ => Degree::NegInfinity,
        }
    }
}

/// Dense univariate polynomial over ℚ.
///
/// Coefficients are stored lowest degree first with no trailing zeros, so the
/// zero polynomial is the empty vector and equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<BigRat>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(BigRat::one())
    }

    pub fn constant(c: BigRat) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// The indeterminate itself.
    pub fn x() -> Self {
        Poly::monomial(BigRat::one(), 1)
    }

    pub fn monomial(c: BigRat, k: usize) -> Self {
        let mut coeffs = vec![BigRat::zero(); k + 1];
        coeffs[k] = c;
        Poly::from_coeffs(coeffs)
    }

    /// `y - c`.
    pub fn linear_root(c: &BigRat) -> Self {
        Poly::from_coeffs(vec![-c.clone(), BigRat::one()])
    }

    /// Build from coefficients listed lowest degree first.
    pub fn from_coeffs(mut coeffs: Vec<BigRat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| BigRat::from_integer(c.into())).collect())
    }

    /// Coefficients, lowest degree first.
    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    /// Degree as an index; `None` for the zero polynomial.
    pub fn deg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn coeff(&self, k: usize) -> BigRat {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn leading(&self) -> BigRat {
        self.coeffs.last().cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn scale(&self, c: &BigRat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Divide by the leading coefficient; the zero polynomial stays zero.
    pub fn monic(&self) -> Poly {
        match self.coeffs.last() {
            None => Poly::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly), ArithError> {
        let dd = divisor.deg().ok_or(ArithError::DivisionByZero)?;
        let lc_inv = divisor.leading().recip();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.deg() else {
            return Ok((Poly::zero(), Poly::zero()));
        };
        if nd < dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![BigRat::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * dc;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    /// Exact quotient; errors unless `divisor` divides `self`.
    pub fn exact_div(&self, divisor: &Poly) -> Result<Poly, ArithError> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(ArithError::InexactDivision)
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    pub fn derivative(&self) -> Poly {
        Poly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigRat::from_integer(k.into()))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigRat) -> BigRat {
        self.coeffs.iter().rev().fold(BigRat::zero(), |acc, c| acc * x + c)
    }

    /// `self(inner(y))`.
    pub fn compose(&self, inner: &Poly) -> Poly {
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, c| &(&acc * inner) + &Poly::constant(c.clone()))
    }

    /// `self(y + c)`.
    pub fn shift(&self, c: &BigRat) -> Poly {
        Poly::from_coeffs(self.taylor(c, self.coeffs.len()))
    }

    /// The first `n` coefficients of `self(y + c)`, by repeated synthetic
    /// division by `y - c`.
    pub fn taylor(&self, c: &BigRat, n: usize) -> Vec<BigRat> {
        if c.is_zero() {
            return (0..n).map(|k| self.coeff(k)).collect();
        }
        let mut work = self.coeffs.clone();
        let mut out = Vec::with_capacity(n);
        for k in 0..n.min(work.len()) {
            // after this pass work[k] holds the k-th Taylor coefficient
            for i in (k..work.len() - 1).rev() {
                let carry = &work[i + 1] * c;
                work[i] += carry;
            }
            out.push(work[k].clone());
        }
        out.resize(n, BigRat::zero());
        out
    }

    /// Integer coefficients with content 1 and positive leading coefficient,
    /// proportional to `self`.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        let den = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * BigRat::from_integer(den.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let sign = if self.leading().is_negative() { -1 } else { 1 };
        if g.is_zero() {
            return ints;
        }
        ints.iter().map(|c| c / &g * sign).collect()
    }

    /// All rational roots with multiplicity, in increasing order.
    pub fn rational_roots(&self) -> Vec<(BigRat, usize)> {
        let mut roots = Vec::new();
        if self.is_constant() {
            return roots;
        }
        let mut p = self.clone();
        let zero_mult = p.coeffs.iter().take_while(|c| c.is_zero()).count();
        if zero_mult > 0 {
            roots.push((BigRat::zero(), zero_mult));
            p = Poly::from_coeffs(p.coeffs[zero_mult..].to_vec());
        }
        if p.is_constant() {
            return roots;
        }
        if p.coeffs.len() <= 3 {
            roots.extend(p.low_degree_roots());
            roots.sort_by(|a, b| a.0.cmp(&b.0));
            return roots;
        }
        let squarefree = p.exact_div(&p.gcd(&p.derivative())).expect("gcd divides");
        for c in squarefree_rational_roots(&squarefree.primitive_integer()) {
            let lin = Poly::linear_root(&c);
            let mut mult = 0;
            while let Ok(q) = p.exact_div(&lin) {
                p = q;
                mult += 1;
            }
            roots.push((c, mult));
        }
        roots.sort_by(|a, b| a.0.cmp(&b.0));
        roots
    }

    /// Rational roots of a polynomial of degree one or two.
    fn low_degree_roots(&self) -> Vec<(BigRat, usize)> {
        if self.coeffs.len() == 2 {
            return vec![(-&self.coeffs[0] / &self.coeffs[1], 1)];
        }
        let (c, b, a) = (&self.coeffs[0], &self.coeffs[1], &self.coeffs[2]);
        let disc = b * b - BigRat::from_integer(4.into()) * a * c;
        let Some(root) = rational_sqrt(&disc) else {
            return Vec::new();
        };
        let two_a = a * BigRat::from_integer(2.into());
        if root.is_zero() {
            return vec![(-b / &two_a, 2)];
        }
        vec![((-b - &root) / &two_a, 1), ((-b + &root) / &two_a, 1)]
    }

    /// Factor as `lc · Π (y - c)^k` when every root is rational.
    pub fn split_linear(&self) -> Option<(BigRat, Vec<(BigRat, usize)>)> {
        let d = self.deg()?;
        let roots = self.rational_roots();
        let total: usize = roots.iter().map(|(_, k)| k).sum();
        (total == d).then(|| (self.leading(), roots))
    }

    /// Render with `var` as the indeterminate, highest degree first, using
    /// `*` and `^` so the output parses back.
    pub fn fmt_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if mono.is_empty() {
                out.push_str(&fmt_rational(&mag));
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&fmt_rational(&mag));
                out.push('*');
                out.push_str(&mono);
            }
        }
        out
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigRat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_in("y"))
    }
}
