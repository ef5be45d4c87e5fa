//! The Schwarzian operator, the equation `S(y) + y'²·R(y) = 0`, the
//! triangular family `R_{α,β,γ}` and Möbius changes of the dependent
//! variable.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::arith::{
    fmt_rational, int, is_integer, parse_rational, partial_fractions, rat, rational_sqrt, ArithError, BigRat,
    ExtRational, Poly, RatFunc,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchwarzianError {
    #[error("input function is constant")]
    ConstantInput,
    #[error("triangle parameters must be nonzero (use inf for a cusp)")]
    ZeroParameter,
    #[error("not in triangular form: {0}")]
    NotTriangular(NotTriangular),
    #[error(
        "triangular shape, but inverse squares ({}) are not all squares of rationals",
        fmt_triple(.0)
    )]
    SymbolicInverseSquare(Box<[BigRat; 3]>),
    #[error("singular Möbius map (ad - bc = 0)")]
    SingularMoebius,
    #[error("expected three comma-separated parameters, got {0:?}")]
    BadParameterList(String),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// Why a rational function failed triangular recognition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotTriangular {
    PoleNotRational,
    PoleOutsideZeroOne(BigRat),
    PoleOrderAboveTwo(BigRat),
    SlowDecayAtInfinity,
    RebuildMismatch,
    NegativeInverseSquare(Box<[BigRat; 3]>),
    TooManySingularPoints(usize),
}

impl fmt::Display for NotTriangular {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotTriangular::PoleNotRational => f.write_str("denominator has non-rational roots"),
            NotTriangular::PoleOutsideZeroOne(c) => {
                write!(f, "pole at y = {} (only 0 and 1 allowed)", fmt_rational(c))
            }
            NotTriangular::PoleOrderAboveTwo(c) => {
                write!(f, "pole of order > 2 at y = {}", fmt_rational(c))
            }
            NotTriangular::SlowDecayAtInfinity => f.write_str("does not vanish to order 2 at infinity"),
            NotTriangular::RebuildMismatch => f.write_str("local data does not rebuild the same function"),
            NotTriangular::NegativeInverseSquare(v) => {
                write!(f, "negative inverse square among ({})", fmt_triple(v))
            }
            NotTriangular::TooManySingularPoints(n) => {
                write!(f, "{n} singular points (at most 3 allowed)")
            }
        }
    }
}

fn fmt_triple(v: &[BigRat; 3]) -> String {
    v.iter().map(fmt_rational).collect::<Vec<_>>().join(", ")
}

/// Parameters `(α, β, γ)` of a triangle with angles `π/α, π/β, π/γ`.
/// `β` sits at `y = 0`, `γ` at `y = 1` and `α` at `y = ∞`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TriangleParams {
    pub alpha: ExtRational,
    pub beta: ExtRational,
    pub gamma: ExtRational,
}

impl TriangleParams {
    pub fn new(alpha: ExtRational, beta: ExtRational, gamma: ExtRational) -> Result<Self, SchwarzianError> {
        let p = TriangleParams { alpha, beta, gamma };
        p.inverses()?;
        Ok(p)
    }

    /// Integer parameters; `0` stands for `∞`.
    pub fn ints(a: i64, b: i64, c: i64) -> Self {
        let e = |n: i64| {
            if n == 0 {
                ExtRational::Infinity
            } else {
                ExtRational::int(n)
            }
        };
        TriangleParams {
            alpha: e(a),
            beta: e(b),
            gamma: e(c),
        }
    }

    pub fn slots(&self) -> [&ExtRational; 3] {
        [&self.alpha, &self.beta, &self.gamma]
    }

    /// `[α⁻¹, β⁻¹, γ⁻¹]` with `∞⁻¹ = 0`.
    pub fn inverses(&self) -> Result<[BigRat; 3], SchwarzianError> {
        let inv = |x: &ExtRational| x.inverse().map_err(|_| SchwarzianError::ZeroParameter);
        Ok([inv(&self.alpha)?, inv(&self.beta)?, inv(&self.gamma)?])
    }

    pub fn inverse_squares(&self) -> Result<[BigRat; 3], SchwarzianError> {
        let [a, b, c] = self.inverses()?;
        Ok([&a * &a, &b * &b, &c * &c])
    }

    /// Every slot lies in `{2, 3, …} ∪ {∞}`.
    pub fn is_integer_triple(&self) -> bool {
        self.slots().iter().all(|x| match x {
            ExtRational::Infinity => true,
            ExtRational::Finite(q) => is_integer(q) && q >= &int(2),
        })
    }

    /// `1/α + 1/β + 1/γ < 1`.
    pub fn is_hyperbolic(&self) -> Result<bool, SchwarzianError> {
        let [a, b, c] = self.inverses()?;
        Ok(a + b + c < BigRat::one())
    }

    pub fn permuted(&self, perm: [usize; 3]) -> TriangleParams {
        let s = self.slots();
        TriangleParams {
            alpha: s[perm[0]].clone(),
            beta: s[perm[1]].clone(),
            gamma: s[perm[2]].clone(),
        }
    }
}

impl fmt::Display for TriangleParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.alpha, self.beta, self.gamma)
    }
}

impl FromStr for TriangleParams {
    type Err = SchwarzianError;

    /// `"2,3,7"`, `"1,inf,inf"`, `"5/2, 3, 3"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 3 {
            return Err(SchwarzianError::BadParameterList(s.to_string()));
        }
        let p = |t: &str| t.parse::<ExtRational>();
        TriangleParams::new(p(parts[0])?, p(parts[1])?, p(parts[2])?)
    }
}

impl Serialize for TriangleParams {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [self.alpha.to_string(), self.beta.to_string(), self.gamma.to_string()].serialize(s)
    }
}

/// `S(g) = (g''/g')' - ½(g''/g')²`.
pub fn schwarzian_of(g: &RatFunc) -> Result<RatFunc, SchwarzianError> {
    let g1 = g.derivative();
    if g1.is_zero() {
        return Err(SchwarzianError::ConstantInput);
    }
    let ratio = g1.derivative().checked_div(&g1)?;
    Ok(&ratio.derivative() - &(&ratio * &ratio).scale(&rat(1, 2)))
}

/// `R_{α,β,γ}` from the inverse squares `[α⁻², β⁻², γ⁻²]`.
pub fn triangular_from_inverse_squares(inv_sq: &[BigRat; 3]) -> RatFunc {
    let [a2, b2, c2] = inv_sq;
    let one = BigRat::one();
    let half = rat(1, 2);
    // over y²(y-1)²: A(y-1)² + B·y² + C·y(y-1)
    let a = (&one - b2) * &half;
    let b = (&one - c2) * &half;
    let c = (b2 + c2 - a2 - &one) * &half;
    let mut num = Poly::from_coeffs(vec![a.clone(), -(&a * int(2)) - &c, &a + &b + &c]);
    let mut den = Poly::from_i64(&[0, 0, 1, -2, 1]);
    for root in [BigRat::zero(), one] {
        let lin = Poly::linear_root(&root);
        while !num.is_zero() && num.eval(&root).is_zero() && den.eval(&root).is_zero() {
            num = num.exact_div(&lin).expect("root divides");
            den = den.exact_div(&lin).expect("root divides");
        }
    }
    RatFunc::from_coprime(num, den)
}

/// The triangular coefficient function
/// `½((1-β⁻²)/y² + (1-γ⁻²)/(y-1)² + (β⁻²+γ⁻²-α⁻²-1)/(y(y-1)))`.
pub fn build_triangular_r(p: &TriangleParams) -> Result<RatFunc, SchwarzianError> {
    Ok(triangular_from_inverse_squares(&p.inverse_squares()?))
}

/// Result of recognizing a triangular coefficient function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecognizedTriangle {
    /// `[α⁻², β⁻², γ⁻²]`.
    pub inverse_squares: [BigRat; 3],
    /// Representative with nonnegative parameters; each is determined only
    /// up to sign.
    pub params: TriangleParams,
}

/// Extract `[α⁻², β⁻², γ⁻²]` from the local data of `r` at `∞, 0, 1` and
/// confirm that they rebuild `r` exactly.
pub fn triangular_inverse_squares(r: &RatFunc) -> Result<[BigRat; 3], SchwarzianError> {
    let not_tri = |why| SchwarzianError::NotTriangular(why);
    let pf = partial_fractions(r).map_err(|_| not_tri(NotTriangular::PoleNotRational))?;
    if !pf.polynomial.is_zero() {
        return Err(not_tri(NotTriangular::SlowDecayAtInfinity));
    }
    for (pole, order) in pf.poles() {
        if !(pole.is_zero() || pole.is_one()) {
            return Err(not_tri(NotTriangular::PoleOutsideZeroOne(pole)));
        }
        if order > 2 {
            return Err(not_tri(NotTriangular::PoleOrderAboveTwo(pole)));
        }
    }
    let at_inf = r
        .limit_at_infinity_scaled(2)
        .ok_or(not_tri(NotTriangular::SlowDecayAtInfinity))?;
    let one = BigRat::one();
    let two = int(2);
    let inv_sq = [
        &one - &two * at_inf,
        &one - &two * pf.coefficient(&int(0), 2),
        &one - &two * pf.coefficient(&int(1), 2),
    ];
    if &triangular_from_inverse_squares(&inv_sq) != r {
        return Err(not_tri(NotTriangular::RebuildMismatch));
    }
    Ok(inv_sq)
}

pub fn recognize_triangular(r: &RatFunc) -> Result<RecognizedTriangle, SchwarzianError> {
    let inverse_squares = triangular_inverse_squares(r)?;
    if inverse_squares.iter().any(Signed::is_negative) {
        return Err(SchwarzianError::NotTriangular(NotTriangular::NegativeInverseSquare(
            Box::new(inverse_squares),
        )));
    }
    let roots: Option<Vec<BigRat>> = inverse_squares.iter().map(rational_sqrt).collect();
    let Some(roots) = roots else {
        return Err(SchwarzianError::SymbolicInverseSquare(Box::new(inverse_squares)));
    };
    let params = TriangleParams {
        alpha: ExtRational::from_inverse(&roots[0]),
        beta: ExtRational::from_inverse(&roots[1]),
        gamma: ExtRational::from_inverse(&roots[2]),
    };
    Ok(RecognizedTriangle {
        inverse_squares,
        params,
    })
}

/// Singular points of `R·dy²`: the finite poles of `r` in increasing order,
/// then `∞` unless `r` vanishes there to order at least four.
pub fn singular_points(r: &RatFunc) -> Result<Vec<ExtRational>, SchwarzianError> {
    let pf = partial_fractions(r).map_err(|_| SchwarzianError::NotTriangular(NotTriangular::PoleNotRational))?;
    let mut out: Vec<ExtRational> = pf.poles().into_iter().map(|(c, _)| ExtRational::Finite(c)).collect();
    if r.order_at_infinity().is_some_and(|k| k < 4) {
        out.push(ExtRational::Infinity);
    }
    Ok(out)
}

/// The Möbius map sending `p0, p1, p2` to `0, 1, ∞`. Only `p2` may be `∞`.
pub fn moebius_to_zero_one_inf(p0: &BigRat, p1: &BigRat, p2: &ExtRational) -> Result<Moebius, SchwarzianError> {
    match p2 {
        ExtRational::Infinity => Moebius::new(BigRat::one(), -p0, BigRat::zero(), p1 - p0),
        ExtRational::Finite(p2) => {
            let s = p1 - p2;
            let t = p1 - p0;
            Moebius::new(s.clone(), -(p0 * &s), t.clone(), -(p2 * &t))
        }
    }
}

/// A triangular coefficient reached by a Möbius change of variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizedTriangle {
    /// `z ↦ y` with the singular points of the input moved to `0, 1, ∞`.
    pub map: Moebius,
    /// `moebius_pullback(input, map)`.
    pub r: RatFunc,
    pub triangle: RecognizedTriangle,
}

/// Recognize `r` as triangular after moving its (at most three) singular
/// points to `0, 1, ∞`. Inputs already in position keep the identity map.
pub fn recognize_up_to_moebius(r: &RatFunc) -> Result<NormalizedTriangle, SchwarzianError> {
    match recognize_triangular(r) {
        Ok(triangle) => {
            return Ok(NormalizedTriangle {
                map: Moebius::identity(),
                r: r.clone(),
                triangle,
            })
        }
        Err(SchwarzianError::NotTriangular(NotTriangular::PoleOutsideZeroOne(_))) => {}
        Err(e) => return Err(e),
    }
    let points = singular_points(r)?;
    if points.len() > 3 {
        return Err(SchwarzianError::NotTriangular(NotTriangular::TooManySingularPoints(
            points.len(),
        )));
    }
    let finite: Vec<BigRat> = points.iter().filter_map(|p| p.as_finite().cloned()).collect();
    let map = if finite.len() == 3 {
        moebius_to_zero_one_inf(&finite[0], &finite[1], &ExtRational::Finite(finite[2].clone()))?
    } else {
        let p0 = finite.first().cloned().unwrap_or_else(BigRat::zero);
        let p1 = finite.get(1).cloned().unwrap_or_else(|| &p0 + BigRat::one());
        moebius_to_zero_one_inf(&p0, &p1, &ExtRational::Infinity)?
    };
    let normalized = moebius_pullback(r, &map)?;
    let triangle = recognize_triangular(&normalized)?;
    Ok(NormalizedTriangle {
        map,
        r: normalized,
        triangle,
    })
}

/// Möbius map `y ↦ (a·y + b)/(c·y + d)` with `ad - bc ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Moebius {
    pub a: BigRat,
    pub b: BigRat,
    pub c: BigRat,
    pub d: BigRat,
}

impl Moebius {
    pub fn new(a: BigRat, b: BigRat, c: BigRat, d: BigRat) -> Result<Self, SchwarzianError> {
        if (&a * &d - &b * &c).is_zero() {
            return Err(SchwarzianError::SingularMoebius);
        }
        Ok(Moebius { a, b, c, d })
    }

    pub fn from_i64(a: i64, b: i64, c: i64, d: i64) -> Result<Self, SchwarzianError> {
        Moebius::new(int(a), int(b), int(c), int(d))
    }

    pub fn identity() -> Self {
        Moebius::from_i64(1, 0, 0, 1).expect("invertible")
    }

    pub fn determinant(&self) -> BigRat {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn inverse(&self) -> Moebius {
        Moebius {
            a: self.d.clone(),
            b: -&self.b,
            c: -&self.c,
            d: self.a.clone(),
        }
    }

    /// `self ∘ inner`.
    pub fn after(&self, inner: &Moebius) -> Moebius {
        Moebius {
            a: &self.a * &inner.a + &self.b * &inner.c,
            b: &self.a * &inner.b + &self.b * &inner.d,
            c: &self.c * &inner.a + &self.d * &inner.c,
            d: &self.c * &inner.b + &self.d * &inner.d,
        }
    }

    pub fn as_ratfunc(&self) -> RatFunc {
        RatFunc::new(
            Poly::from_coeffs(vec![self.b.clone(), self.a.clone()]),
            Poly::from_coeffs(vec![self.d.clone(), self.c.clone()]),
        )
        .expect("invertible map has nonzero denominator")
    }
}

impl FromStr for Moebius {
    type Err = SchwarzianError;

    /// `"a,b,c,d"` with rational entries.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 4 {
            return Err(SchwarzianError::BadParameterList(s.to_string()));
        }
        let v: Vec<BigRat> = parts.iter().map(|t| parse_rational(t)).collect::<Result<_, _>>()?;
        let [a, b, c, d]: [BigRat; 4] = v.try_into().expect("four entries");
        Moebius::new(a, b, c, d)
    }
}

impl fmt::Display for Moebius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{},{},{}",
            fmt_rational(&self.a),
            fmt_rational(&self.b),
            fmt_rational(&self.c),
            fmt_rational(&self.d)
        )
    }
}

/// Transport `r` along `z = m(y)`: returns `r̃(z) = r(m⁻¹(z))·((m⁻¹)'(z))²`,
/// so `m ∘ y` solves the equation for `r̃` whenever `y` solves it for `r`.
pub fn moebius_pullback(r: &RatFunc, m: &Moebius) -> Result<RatFunc, SchwarzianError> {
    if m.determinant().is_zero() {
        return Err(SchwarzianError::SingularMoebius);
    }
    let inv = m.inverse().as_ratfunc();
    let dinv = inv.derivative();
    Ok(&r.compose(&inv)? * &(&dinv * &dinv))
}

/// `S(g) + g'²·R(g)` for a candidate solution `g(t)`.
pub fn residual(g: &RatFunc, r: &RatFunc) -> Result<RatFunc, SchwarzianError> {
    let s = schwarzian_of(g)?;
    let g1 = g.derivative();
    Ok(&s + &(&(&g1 * &g1) * &r.compose(g)?))
}

pub fn check_solution(g: &RatFunc, r: &RatFunc) -> Result<bool, SchwarzianError> {
    Ok(residual(g, r)?.is_zero())
}

/// The third-order equation `S_{d/dt}(y) + (y')²·R(y) = 0`, determined by
/// `R` alone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchwarzianEquation {
    pub r: RatFunc,
}

impl SchwarzianEquation {
    pub fn new(r: RatFunc) -> Self {
        SchwarzianEquation { r }
    }

    pub fn triangular(p: &TriangleParams) -> Result<Self, SchwarzianError> {
        Ok(SchwarzianEquation::new(build_triangular_r(p)?))
    }

    pub fn is_solved_by(&self, g: &RatFunc) -> Result<bool, SchwarzianError> {
        check_solution(g, &self.r)
    }
}

impl fmt::Display for SchwarzianEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.r.is_zero() {
            f.write_str("S_t(y) = 0")
        } else {
            write!(f, "S_t(y) + (y')^2 * R(y) = 0,  R(y) = {}", self.r)
        }
    }
}
