//! The Riccati equation `du/dy + u² + ½R(y) = 0`, its linearization
//! `v'' + ½R·v = 0` (via `u = v'/v`), and an exact search for all rational
//! solutions.
//!
//! The search is the first case of Kovacic's algorithm specialised to
//! Fuchsian coefficients: a rational solution has only simple poles, its
//! residue at each singular point is a root of the local indicial equation,
//! and after removing those poles what is left is `P'/P` for a polynomial `P`
//! of a degree fixed by the exponent at infinity.

use std::fmt;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::arith::{
    fmt_rational, int, is_integer, partial_fractions, rat, rational_sqrt, ArithError, BigRat, Poly, RatFunc,
};
use crate::kimura::{decide_condition_ric, KimuraVerdict};
use crate::schwarzian::{build_triangular_r, SchwarzianError, TriangleParams};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RiccatiError {
    #[error("indicial equation at {point} has irrational roots (e(e-1) + {kappa} = 0); no rational solution can have a pole there")]
    IrrationalLocalExponent { point: String, kappa: String },
    #[error("coefficient has non-rational poles: {0}")]
    NonRationalPoles(String),
    #[error("irregular singularity at {0} (pole of R/2 of order > 2)")]
    IrregularSingularity(String),
    #[error("internal check failed: candidate {0} does not satisfy the equation")]
    VerificationFailed(String),
    #[error(transparent)]
    Schwarzian(#[from] SchwarzianError),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// `du/dy + u² + ½R(y) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RiccatiEq {
    r: RatFunc,
}

impl RiccatiEq {
    pub fn new(r: RatFunc) -> Self {
        RiccatiEq { r }
    }

    pub fn r(&self) -> &RatFunc {
        &self.r
    }

    pub fn half_r(&self) -> RatFunc {
        self.r.scale(&rat(1, 2))
    }

    /// `u' + u² + ½R`.
    pub fn residual(&self, u: &RatFunc) -> RatFunc {
        &(&u.derivative() + &(u * u)) + &self.half_r()
    }

    pub fn is_solution(&self, u: &RatFunc) -> bool {
        self.residual(u).is_zero()
    }
}

impl fmt::Display for RiccatiEq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let h = self.half_r();
        if h.is_zero() {
            f.write_str("du/dy + u^2 = 0")
        } else {
            write!(f, "du/dy + u^2 + {} = 0", h)
        }
    }
}

pub fn associate_riccati(r: &RatFunc) -> RiccatiEq {
    RiccatiEq::new(r.clone())
}

/// `v'' + coefficient·v = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearOde2 {
    pub coefficient: RatFunc,
}

impl LinearOde2 {
    pub fn apply(&self, v: &RatFunc) -> RatFunc {
        &v.derivative().derivative() + &(&self.coefficient * v)
    }

    pub fn is_solution(&self, v: &RatFunc) -> bool {
        self.apply(v).is_zero()
    }
}

impl fmt::Display for LinearOde2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coefficient.is_zero() {
            f.write_str("v'' = 0")
        } else {
            write!(f, "v'' + ({})*v = 0", self.coefficient)
        }
    }
}

/// `u = v'/v` turns the Riccati equation into `v'' + ½R·v = 0`.
pub fn to_linear_ode(e: &RiccatiEq) -> LinearOde2 {
    LinearOde2 {
        coefficient: e.half_r(),
    }
}

/// `∂a/∂y + ½a² + R`; it vanishes exactly when `a/2` solves the Riccati
/// equation, since `(a/2)' + (a/2)² + ½R` is half of it.
pub fn half_riccati_residual(a: &RatFunc, r: &RatFunc) -> RatFunc {
    &(&a.derivative() + &(a * a).scale(&rat(1, 2))) + r
}

/// A singular point of `v'' + ½R·v = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Point {
    Finite(BigRat),
    Infinity,
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Finite(c) => write!(f, "y = {}", fmt_rational(c)),
            Point::Infinity => f.write_str("y = inf"),
        }
    }
}

/// Roots of `e(e-1) + κ = 0` at one point. At a finite pole they are the
/// admissible residues of `u`; at infinity they are the admissible values of
/// `lim y·u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalExponents {
    pub point: Point,
    /// Coefficient of `(y-c)^{-2}` (or of `y^{-2}` at infinity) in `½R`.
    pub kappa: BigRat,
    pub exponents: Vec<BigRat>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CandidateStatus {
    /// `d` is negative or not an integer.
    DegreeRejected,
    /// `d` exceeds the configured bound; completeness is lost.
    DegreeAboveBound,
    /// The auxiliary equation has no nonzero polynomial solution.
    NoPolynomial,
    Solution(usize),
    Family(usize),
    /// Solution already listed from an earlier combination.
    Duplicate(usize),
}

/// One combination of local exponents examined by the search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Candidate {
    /// One residue per finite pole, in increasing pole order.
    pub residues: Vec<BigRat>,
    pub at_infinity: BigRat,
    /// `at_infinity - Σ residues`.
    pub degree: BigRat,
    pub status: CandidateStatus,
}

/// `u = θ + P'/P` with `θ = Σ e_c/(y - c)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSolution {
    pub u: RatFunc,
    pub residues: Vec<(BigRat, BigRat)>,
    pub polynomial: Poly,
}

impl RationalSolution {
    /// `v = P·Π(y - c)^{e_c}` when every `e_c` is an integer, so that
    /// `u = v'/v` with `v` rational.
    pub fn linear_solution(&self) -> Option<RatFunc> {
        let mut v = RatFunc::from_poly(self.polynomial.clone());
        for (c, e) in &self.residues {
            if !is_integer(e) {
                return None;
            }
            let k: i32 = e.to_integer().try_into().ok()?;
            let factor = RatFunc::from_poly(Poly::linear_root(c)).pow(k).ok()?;
            v = &v * &factor;
        }
        Some(v)
    }
}

/// A one-parameter (or larger) family `u = θ + P'/P`, `P ∈ span(basis)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionFamily {
    pub theta: RatFunc,
    pub basis: Vec<Poly>,
}

impl SolutionFamily {
    pub fn member(&self, p: &Poly) -> RatFunc {
        let pr = RatFunc::from_poly(p.clone());
        let ratio = RatFunc::from_poly(p.derivative())
            .checked_div(&pr)
            .expect("nonzero member");
        &self.theta + &ratio
    }
}

impl fmt::Display for SolutionFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let basis: Vec<String> = self.basis.iter().map(|p| p.to_string()).collect();
        if self.theta.is_zero() {
            write!(f, "u = P'/P, P in span{{{}}}", basis.join(", "))
        } else {
            write!(f, "u = {} + P'/P, P in span{{{}}}", self.theta, basis.join(", "))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchCertificate {
    pub local: Vec<LocalExponents>,
    pub candidates: Vec<Candidate>,
    /// False when some candidate degree exceeded the bound.
    pub complete: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub solutions: Vec<RationalSolution>,
    pub families: Vec<SolutionFamily>,
    pub certificate: SearchCertificate,
}

impl OracleResult {
    pub fn has_rational_solution(&self) -> bool {
        !self.solutions.is_empty() || !self.families.is_empty()
    }

    pub fn contains(&self, u: &RatFunc) -> bool {
        self.solutions.iter().any(|s| &s.u == u)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleOptions {
    /// Largest auxiliary polynomial degree attempted.
    pub degree_bound: usize,
    /// Keep the per-candidate log in the certificate.
    pub certify: bool,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions {
            degree_bound: 24,
            certify: true,
        }
    }
}

fn indicial_roots(point: Point, kappa: BigRat) -> Result<LocalExponents, RiccatiError> {
    let disc = BigRat::one() - int(4) * &kappa;
    let Some(root) = rational_sqrt(&disc) else {
        return Err(RiccatiError::IrrationalLocalExponent {
            point: point.to_string(),
            kappa: fmt_rational(&kappa),
        });
    };
    let half = rat(1, 2);
    let mut exponents = vec![(BigRat::one() + &root) * &half];
    if !root.is_zero() {
        exponents.push((BigRat::one() - &root) * &half);
    }
    Ok(LocalExponents {
        point,
        kappa,
        exponents,
    })
}

/// Local exponents at every finite pole of `½R` and at infinity.
pub fn local_exponents(e: &RiccatiEq) -> Result<Vec<LocalExponents>, RiccatiError> {
    let h = e.half_r();
    let pf = partial_fractions(&h).map_err(|err| match err {
        ArithError::NotSplitOverRationals(d) => RiccatiError::NonRationalPoles(d),
        other => RiccatiError::Arith(other),
    })?;
    if !pf.polynomial.is_zero() {
        return Err(RiccatiError::IrregularSingularity("y = inf".into()));
    }
    let mut out = Vec::new();
    for (pole, order) in pf.poles() {
        if order > 2 {
            return Err(RiccatiError::IrregularSingularity(Point::Finite(pole).to_string()));
        }
        let kappa = pf.coefficient(&pole, 2);
        out.push(indicial_roots(Point::Finite(pole), kappa)?);
    }
    let kappa_inf = h
        .limit_at_infinity_scaled(2)
        .ok_or_else(|| RiccatiError::IrregularSingularity("y = inf".into()))?;
    out.push(indicial_roots(Point::Infinity, kappa_inf)?);
    Ok(out)
}

/// Basis of the kernel of a matrix given as rows over ℚ.
fn nullspace(rows: &[Vec<BigRat>], ncols: usize) -> Vec<Vec<BigRat>> {
    let mut m: Vec<Vec<BigRat>> = rows
        .iter()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .cloned()
        .collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][col].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                let pivot_row = m[r].clone();
                for (x, pv) in m[i].iter_mut().zip(&pivot_row) {
                    *x -= &f * pv;
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![BigRat::zero(); ncols];
            v[fc] = BigRat::one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[i][fc].clone();
            }
            v
        })
        .collect()
}

/// Polynomials `P` of degree at most `d` with
/// `P'' + 2θP' + (θ' + θ² + ½R)P = 0`.
fn auxiliary_polynomials(theta: &RatFunc, half_r: &RatFunc, d: usize) -> Vec<Poly> {
    let w = &(&theta.derivative() + &(theta * theta)) + half_r;
    let two_theta = theta.scale(&int(2));
    let images: Vec<RatFunc> = (0..=d)
        .map(|k| {
            let mono = Poly::monomial(BigRat::one(), k);
            let p = RatFunc::from_poly(mono.clone());
            let p1 = RatFunc::from_poly(mono.derivative());
            let p2 = RatFunc::from_poly(mono.derivative().derivative());
            &(&p2 + &(&two_theta * &p1)) + &(&w * &p)
        })
        .collect();
    // Common denominator: lcm of all denominators.
    let mut den = Poly::one();
    for img in &images {
        let g = den.gcd(img.den());
        den = (&den * img.den()).exact_div(&g).expect("lcm");
    }
    let numerators: Vec<Poly> = images
        .iter()
        .map(|img| {
            let scale = den.exact_div(img.den()).expect("lcm multiple");
            img.num() * &scale
        })
        .collect();
    let nrows = numerators.iter().filter_map(Poly::deg).max().map_or(0, |m| m + 1);
    let rows: Vec<Vec<BigRat>> = (0..nrows)
        .map(|i| numerators.iter().map(|n| n.coeff(i)).collect())
        .collect();
    nullspace(&rows, d + 1)
        .into_iter()
        .map(|v| Poly::from_coeffs(v).monic())
        .collect()
}

/// All rational solutions of the Riccati equation, with a log of every
/// exponent combination examined.
///
/// Fixed solutions are listed individually; when the auxiliary equation has
/// a kernel of dimension two or more the resulting family (for instance
/// `u = 1/(y - c)` for `R = 0`) is reported as a [`SolutionFamily`].
pub fn rational_solutions(e: &RiccatiEq, opts: OracleOptions) -> Result<OracleResult, RiccatiError> {
    let local = local_exponents(e)?;
    let half_r = e.half_r();
    let (finite, infinity) = local.split_at(local.len() - 1);
    let infinity = &infinity[0];

    let mut solutions: Vec<RationalSolution> = Vec::new();
    let mut families: Vec<SolutionFamily> = Vec::new();
    let mut candidates = Vec::new();
    let mut complete = true;

    // Odometer over one exponent per finite pole.
    let mut choice = vec![0usize; finite.len()];
    loop {
        let residues: Vec<BigRat> = finite
            .iter()
            .zip(&choice)
            .map(|(l, &i)| l.exponents[i].clone())
            .collect();
        let residue_sum: BigRat = residues.iter().sum();
        // built only when some degree survives, which is rare
        let mut theta_cell: Option<RatFunc> = None;
        for s in &infinity.exponents {
            let degree = s - &residue_sum;
            let status = if !is_integer(&degree) || degree.is_negative() {
                CandidateStatus::DegreeRejected
            } else {
                let d: usize = degree.to_integer().try_into().unwrap_or(usize::MAX);
                if d > opts.degree_bound {
                    complete = false;
                    CandidateStatus::DegreeAboveBound
                } else {
                    let theta = theta_cell
                        .get_or_insert_with(|| {
                            finite.iter().zip(&residues).fold(RatFunc::zero(), |acc, (l, r)| {
                                let Point::Finite(c) = &l.point else { unreachable!() };
                                &acc + &RatFunc::pole_term(r, c, 1)
                            })
                        })
                        .clone();
                    let basis = auxiliary_polynomials(&theta, &half_r, d);
                    match basis.len() {
                        0 => CandidateStatus::NoPolynomial,
                        1 => {
                            let p = basis.into_iter().next().expect("one element");
                            let pr = RatFunc::from_poly(p.clone());
                            let u = &theta + &RatFunc::from_poly(p.derivative()).checked_div(&pr)?;
                            if !e.is_solution(&u) {
                                return Err(RiccatiError::VerificationFailed(u.to_string()));
                            }
                            match solutions.iter().position(|s| s.u == u) {
                                Some(i) => CandidateStatus::Duplicate(i),
                                None => {
                                    let pairs = finite
                                        .iter()
                                        .zip(&residues)
                                        .map(|(l, r)| {
                                            let Point::Finite(c) = &l.point else { unreachable!() };
                                            (c.clone(), r.clone())
                                        })
                                        .collect();
                                    solutions.push(RationalSolution {
                                        u,
                                        residues: pairs,
                                        polynomial: p,
                                    });
                                    CandidateStatus::Solution(solutions.len() - 1)
                                }
                            }
                        }
                        _ => {
                            let fam = SolutionFamily {
                                theta: theta.clone(),
                                basis,
                            };
                            for p in &fam.basis {
                                if !e.is_solution(&fam.member(p)) {
                                    return Err(RiccatiError::VerificationFailed(fam.to_string()));
                                }
                            }
                            match families.iter().position(|f| f == &fam) {
                                Some(i) => CandidateStatus::Duplicate(i),
                                None => {
                                    families.push(fam);
                                    CandidateStatus::Family(families.len() - 1)
                                }
                            }
                        }
                    }
                }
            };
            if opts.certify {
                candidates.push(Candidate {
                    residues: residues.clone(),
                    at_infinity: s.clone(),
                    degree,
                    status,
                });
            }
        }
        // advance
        let mut i = 0;
        loop {
            if i == choice.len() {
                return Ok(OracleResult {
                    solutions,
                    families,
                    certificate: SearchCertificate {
                        local,
                        candidates,
                        complete,
                    },
                });
            }
            choice[i] += 1;
            if choice[i] < finite[i].exponents.len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// Oracle run on the triangular coefficient for `p`.
pub fn rational_solutions_for(p: &TriangleParams, opts: OracleOptions) -> Result<OracleResult, RiccatiError> {
    rational_solutions(&associate_riccati(&build_triangular_r(p)?), opts)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Consistency {
    Consistent,
    /// Kimura reported Condition Ric while a rational solution exists.
    Contradiction,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConsistencyReport {
    pub params: TriangleParams,
    pub verdict: KimuraVerdict,
    pub oracle: OracleResult,
    pub status: Consistency,
    pub note: &'static str,
}

/// Run the table decision and the rational-solution search side by side.
pub fn cross_check(p: &TriangleParams, opts: OracleOptions) -> Result<ConsistencyReport, RiccatiError> {
    let verdict = decide_condition_ric(p)?;
    let oracle = rational_solutions_for(p, opts)?;
    let found = oracle.has_rational_solution();
    let (status, note) = match (verdict.holds(), found) {
        (true, true) => (
            Consistency::Contradiction,
            "Condition Ric reported but a rational solution exists",
        ),
        (true, false) => (Consistency::Consistent, "no witness, no rational solution"),
        (false, true) => (Consistency::Consistent, "witness confirmed by a rational solution"),
        (false, false) => (
            Consistency::Consistent,
            "witness without rational solution; algebraic degree >= 2 possible",
        ),
    };
    Ok(ConsistencyReport {
        params: p.clone(),
        verdict,
        oracle,
        status,
        note,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schwarzian::TriangleParams;

    fn y() -> RatFunc {
        RatFunc::x()
    }

    fn c(n: i64) -> RatFunc {
        RatFunc::constant(int(n))
    }

    fn tri(s: &str) -> RatFunc {
        build_triangular_r(&s.parse::<TriangleParams>().unwrap()).unwrap()
    }

    fn known_solution() -> RatFunc {
        // ½(1/y + 1/(y-1))
        (y().recip().unwrap() + (y() - c(1)).recip().unwrap()).scale(&rat(1, 2))
    }

    #[test]
    fn associated_equations() {
        let e = associate_riccati(&RatFunc::zero());
        assert_eq!(e.to_string(), "du/dy + u^2 = 0");
        let e = associate_riccati(&tri("1,inf,inf"));
        assert_eq!(e.to_string(), "du/dy + u^2 + 1/4/(y^2*(y - 1)^2) = 0");
        let lin = to_linear_ode(&e);
        let den = &Poly::from_i64(&[0, 0, 4]) * &Poly::from_i64(&[-1, 1]).pow(2);
        assert_eq!(lin.coefficient, RatFunc::new(Poly::one(), den).unwrap());
        assert_eq!(
            to_linear_ode(&associate_riccati(&RatFunc::zero())).to_string(),
            "v'' = 0"
        );
    }

    #[test]
    fn logarithmic_derivative_correspondence() {
        let e = associate_riccati(&RatFunc::zero());
        assert!(to_linear_ode(&e).is_solution(&y()));
        assert!(e.is_solution(&y().recip().unwrap()));
    }

    #[test]
    fn oracle_zero_coefficient() {
        let res = rational_solutions(&associate_riccati(&RatFunc::zero()), OracleOptions::default()).unwrap();
        assert!(res.contains(&RatFunc::zero()));
        assert_eq!(res.families.len(), 1);
        let fam = &res.families[0];
        assert_eq!(fam.member(&Poly::linear_root(&int(3))), (y() - c(3)).recip().unwrap());
        assert!(res.certificate.complete);
    }

    #[test]
    fn oracle_one_inf_inf() {
        let e = associate_riccati(&tri("1,inf,inf"));
        let res = rational_solutions(&e, OracleOptions::default()).unwrap();
        assert_eq!(res.solutions.len(), 1);
        assert_eq!(res.solutions[0].u, known_solution());
        assert!(e.residual(&res.solutions[0].u).is_zero());
        assert!(res.families.is_empty());
    }

    #[test]
    fn oracle_empty_cases() {
        for p in ["2,3,7", "2,3,inf", "inf,inf,inf", "2,2,2"] {
            let res = rational_solutions(&associate_riccati(&tri(p)), OracleOptions::default()).unwrap();
            assert!(!res.has_rational_solution(), "{p}");
            assert!(res.certificate.complete);
            let combos: usize = res.certificate.local.iter().map(|l| l.exponents.len()).product();
            assert_eq!(res.certificate.candidates.len(), combos);
        }
    }

    #[test]
    fn integer_residues_reconstruct_linear_solution() {
        // v = y(y-1) solves v'' + r v = 0 for r = -2/(y(y-1)); R = 2r.
        let v = y() * (y() - c(1));
        let r = -v.derivative().derivative().checked_div(&v).unwrap();
        let big_r = r.scale(&int(2));
        let e = associate_riccati(&big_r);
        let res = rational_solutions(&e, OracleOptions::default()).unwrap();
        let expected_u = v.derivative().checked_div(&v).unwrap();
        let sol = res.solutions.iter().find(|s| s.u == expected_u).expect("found");
        let lin = to_linear_ode(&e);
        let rebuilt = sol.linear_solution().unwrap();
        assert!(lin.is_solution(&rebuilt));
        assert_eq!(rebuilt.derivative().checked_div(&rebuilt).unwrap(), sol.u);
    }

    #[test]
    fn oracle_errors() {
        let irregular = associate_riccati(&y().pow(-3).unwrap());
        assert!(matches!(
            rational_solutions(&irregular, OracleOptions::default()),
            Err(RiccatiError::IrregularSingularity(_))
        ));
        let constant = associate_riccati(&c(1));
        assert!(matches!(
            rational_solutions(&constant, OracleOptions::default()),
            Err(RiccatiError::IrregularSingularity(_))
        ));
        let complex_poles = associate_riccati(&RatFunc::new(Poly::one(), Poly::from_i64(&[1, 0, 1])).unwrap());
        assert!(matches!(
            rational_solutions(&complex_poles, OracleOptions::default()),
            Err(RiccatiError::NonRationalPoles(_))
        ));
        // κ = 1 at y = 0: e² - e + 1 has no rational root
        let irr = associate_riccati(&y().pow(-2).unwrap().scale(&int(2)));
        assert!(matches!(
            rational_solutions(&irr, OracleOptions::default()),
            Err(RiccatiError::IrrationalLocalExponent { .. })
        ));
    }

    #[test]
    fn degree_bound_marks_incomplete() {
        // R = 0 needs degree 1 for the family; bound 0 cuts it off.
        let opts = OracleOptions {
            degree_bound: 0,
            certify: true,
        };
        let res = rational_solutions(&associate_riccati(&RatFunc::zero()), opts).unwrap();
        assert!(!res.certificate.complete);
        assert!(res.families.is_empty());
    }

    #[test]
    fn half_riccati_bridge() {
        let r = tri("1,inf,inf");
        let a = y().recip().unwrap() + (y() - c(1)).recip().unwrap();
        assert!(half_riccati_residual(&a, &r).is_zero());
        assert!(associate_riccati(&r).is_solution(&a.scale(&rat(1, 2))));
        let not_a = y().recip().unwrap();
        assert!(!half_riccati_residual(&not_a, &r).is_zero());
        assert!(!associate_riccati(&r).is_solution(&not_a.scale(&rat(1, 2))));
    }

    #[test]
    fn cross_checks() {
        let opts = OracleOptions::default();
        let rep = cross_check(&"2,3,7".parse().unwrap(), opts).unwrap();
        assert_eq!(rep.status, Consistency::Consistent);
        assert!(rep.verdict.holds());
        let rep = cross_check(&"1,1,1".parse().unwrap(), opts).unwrap();
        assert_eq!(rep.status, Consistency::Consistent);
        assert!(rep.oracle.contains(&RatFunc::zero()));
        let rep = cross_check(&"2,2,2".parse().unwrap(), opts).unwrap();
        assert_eq!(rep.status, Consistency::Consistent);
        assert!(!rep.verdict.holds());
        assert!(!rep.oracle.has_rational_solution());
        assert!(rep.note.contains(">= 2"));
    }
}
