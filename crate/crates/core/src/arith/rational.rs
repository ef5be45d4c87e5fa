use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::ArithError;

/// Exact rational number with a positive, coprime denominator.
pub type BigRat = num_rational::BigRational;

/// Shorthand constructor for small rationals. Panics on a zero denominator.
pub fn rat(numer: i64, denom: i64) -> BigRat {
    BigRat::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(n: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(n))
}

pub fn is_integer(q: &BigRat) -> bool {
    q.denom().is_one()
}

/// Fractional part in `[0, 1)`, so that `q = floor(q) + frac(q)`.
pub fn frac(q: &BigRat) -> BigRat {
    q - q.floor()
}

/// Exact square root when `q` is the square of a rational, choosing the
/// nonnegative root.
pub fn rational_sqrt(q: &BigRat) -> Option<BigRat> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(BigRat::new(n, d))
    } else {
        None
    }
}

/// Parse `"p"`, `"-p"` or `"p/q"` into an exact rational.
pub fn parse_rational(text: &str) -> Result<BigRat, ArithError> {
    let bad = || ArithError::BadRational(text.to_string());
    let t = text.trim();
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRat::new(n, d))
}

/// Format a rational as `p` or `p/q`.
pub fn fmt_rational(q: &BigRat) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Least common multiple of the denominators of a family of rationals.
pub fn common_denominator<'a>(qs: impl IntoIterator<Item = &'a BigRat>) -> BigInt {
    qs.into_iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

/// A rational number or the point at infinity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExtRational {
    Finite(BigRat),
    Infinity,
}

impl ExtRational {
    pub fn int(n: i64) -> Self {
        ExtRational::Finite(int(n))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtRational::Infinity)
    }

    /// `1/∞ = 0`, `1/q` for finite nonzero `q`; the inverse of zero does not
    /// exist.
    pub fn inverse(&self) -> Result<BigRat, ArithError> {
        match self {
            ExtRational::Infinity => Ok(BigRat::zero()),
            ExtRational::Finite(q) if q.is_zero() => Err(ArithError::ZeroInverse),
            ExtRational::Finite(q) => Ok(q.recip()),
        }
    }

    /// The value whose inverse is `inv` (`0 ↦ ∞`).
    pub fn from_inverse(inv: &BigRat) -> Self {
        if inv.is_zero() {
            ExtRational::Infinity
        } else {
            ExtRational::Finite(inv.recip())
        }
    }

    pub fn as_finite(&self) -> Option<&BigRat> {
        match self {
            ExtRational::Finite(q) => Some(q),
            ExtRational::Infinity => None,
        }
    }

    pub fn neg(&self) -> Self {
        match self {
            ExtRational::Finite(q) => ExtRational::Finite(-q),
            ExtRational::Infinity => ExtRational::Infinity,
        }
    }
}

impl fmt::Display for ExtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRational::Finite(q) => f.write_str(&fmt_rational(q)),
            ExtRational::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for ExtRational {
    type Err = ArithError;

    /// Accepts `inf` (any case), `∞`, integers and `p/q`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("inf") || t == "∞" {
            return Ok(ExtRational::Infinity);
        }
        parse_rational(t).map(ExtRational::Finite)
    }
}

impl From<BigRat> for ExtRational {
    fn from(q: BigRat) -> Self {
        ExtRational::Finite(q)
    }
}
