//! The four command pipelines behind the `schwarzric` binary.
//!
//! Each `cmd_*` function returns a serializable report plus an exit code.
//! Field order in the structs below is the field order of the JSON output.

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::arith::{fmt_rational, parse_rational, BigRat, RatFunc};
use crate::expr::{parse_ratfunc, ExprError};
use crate::kimura::{
    decide_condition_ric, hyperbolic_integer_triples, sweep_triples, verify_witness, KimuraVerdict, KimuraWitness,
};
use crate::puiseux::{default_truncation, leading_constraints, ConstraintReport};
use crate::riccati::{
    associate_riccati, rational_solutions, to_linear_ode, CandidateStatus, OracleOptions, OracleResult, RiccatiError,
};
use crate::schwarzian::{
    build_triangular_r, moebius_pullback, recognize_up_to_moebius, Moebius, NormalizedTriangle, SchwarzianError,
    TriangleParams,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INCONSISTENT: i32 = 3;

/// An input error, tagged with the module that rejected it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{module}: {message}")]
pub struct InputError {
    pub module: &'static str,
    pub message: String,
}

impl InputError {
    fn new(module: &'static str, message: impl ToString) -> Self {
        InputError {
            module,
            message: message.to_string(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        EXIT_INPUT
    }
}

impl From<SchwarzianError> for InputError {
    fn from(e: SchwarzianError) -> Self {
        InputError::new("schwarzian", e)
    }
}

impl From<ExprError> for InputError {
    fn from(e: ExprError) -> Self {
        InputError::new("expr", e)
    }
}

impl From<RiccatiError> for InputError {
    fn from(e: RiccatiError) -> Self {
        InputError::new("riccati", e)
    }
}

/// A report together with the process exit code it implies.
#[derive(Debug, Clone)]
pub struct Outcome<T> {
    pub report: T,
    pub exit_code: i32,
}

pub trait Render: Serialize {
    fn render_text(&self) -> String;

    fn render_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Triangle(TriangleParams),
    Expr { text: String, var: String },
}

/// Where the coefficient `R` comes from, plus an optional Möbius change
/// applied before anything else.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputSpec {
    pub source: Source,
    pub moebius: Option<Moebius>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InputEcho {
    pub kind: &'static str,
    pub text: String,
    pub variable: String,
    pub moebius: Option<String>,
}

impl InputSpec {
    pub fn triangle(p: TriangleParams) -> Self {
        InputSpec {
            source: Source::Triangle(p),
            moebius: None,
        }
    }

    pub fn expr(text: &str, var: &str) -> Self {
        InputSpec {
            source: Source::Expr {
                text: text.to_string(),
                var: var.to_string(),
            },
            moebius: None,
        }
    }

    /// Build from command-line flags; exactly one of `triangle`, `expr`.
    pub fn from_flags(
        triangle: Option<&str>,
        expr: Option<&str>,
        var: &str,
        moebius: Option<&str>,
    ) -> Result<Self, InputError> {
        let source = match (triangle, expr) {
            (Some(t), None) => Source::Triangle(t.parse()?),
            (None, Some(e)) => Source::Expr {
                text: e.to_string(),
                var: var.to_string(),
            },
            _ => return Err(InputError::new("cli", "give exactly one of --triangle or --expr")),
        };
        let moebius = moebius.map(str::parse).transpose()?;
        Ok(InputSpec { source, moebius })
    }

    pub fn var(&self) -> &str {
        match &self.source {
            Source::Triangle(_) => "y",
            Source::Expr { var, .. } => var,
        }
    }

    pub fn echo(&self) -> InputEcho {
        let (kind, text) = match &self.source {
            Source::Triangle(p) => ("triangle", p.to_string()),
            Source::Expr { text, .. } => ("expr", text.clone()),
        };
        InputEcho {
            kind,
            text,
            variable: self.var().to_string(),
            moebius: self.moebius.as_ref().map(|m| m.to_string()),
        }
    }

    /// The coefficient `R` after the optional Möbius change.
    pub fn coefficient(&self) -> Result<RatFunc, InputError> {
        let r = match &self.source {
            Source::Triangle(p) => build_triangular_r(p)?,
            Source::Expr { text, var } => parse_ratfunc(text, var)?,
        };
        match &self.moebius {
            Some(m) => Ok(moebius_pullback(&r, m)?),
            None => Ok(r),
        }
    }
}

// ---------------------------------------------------------------- analyze

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Conclusion {
    NoOrderTwoSubvarieties,
    AlgebraicSolutionIndicated,
    NotTriangular,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TriangularEcho {
    pub recognized: bool,
    /// Möbius map `a,b,c,d` that moved the singular points to `0, 1, inf`.
    pub map: Option<String>,
    pub coefficient: Option<String>,
    pub inverse_squares: Option<[String; 3]>,
    pub params: Option<TriangleParams>,
    pub reason: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KimuraEcho {
    pub outcome: &'static str,
    pub witness: Option<String>,
    pub condition: Option<u8>,
    pub row: Option<u8>,
    /// Independent replay of the witness.
    pub replayed: Option<bool>,
}

impl KimuraEcho {
    pub fn new(p: &TriangleParams, v: &KimuraVerdict) -> Self {
        let w = v.witness();
        KimuraEcho {
            outcome: v.outcome_tag(),
            witness: w.map(|w| w.to_string()),
            condition: w.map(KimuraWitness::condition),
            row: match w {
                Some(KimuraWitness::Table { row, .. }) => Some(*row),
                _ => None,
            },
            replayed: w.map(|w| verify_witness(p, w)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleEcho {
    pub solutions: Vec<String>,
    /// Number of local-exponent combinations examined.
    pub searched: usize,
    pub families: Vec<String>,
    pub complete: bool,
    pub consistency: Option<&'static str>,
    pub error: Option<String>,
}

impl OracleEcho {
    fn from_result(res: &OracleResult, var: &str) -> Self {
        OracleEcho {
            solutions: res.solutions.iter().map(|s| s.u.fmt_in(var)).collect(),
            searched: res.certificate.candidates.len(),
            families: res.families.iter().map(|f| f.to_string()).collect(),
            complete: res.certificate.complete,
            consistency: None,
            error: None,
        }
    }

    fn failed(e: RiccatiError) -> Self {
        OracleEcho {
            solutions: Vec::new(),
            searched: 0,
            families: Vec::new(),
            complete: false,
            consistency: None,
            error: Some(format!("riccati: {e}")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub input: InputEcho,
    pub normalized: String,
    pub triangular: TriangularEcho,
    pub hyperbolic: Option<bool>,
    pub kimura: Option<KimuraEcho>,
    pub oracle: Option<OracleEcho>,
    pub conclusion: Conclusion,
    pub citations: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AnalyzeOptions {
    pub oracle: bool,
    pub degree_bound: usize,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            oracle: false,
            degree_bound: OracleOptions::default().degree_bound,
        }
    }
}

const CITE_KIMURA: &str = "Kimura's table of exceptional parameter triples and the odd-sum condition";
const CITE_RIC: &str =
    "Condition Ric via Kimura's table => no order-two subvarieties; strong minimality is not re-proved here";
const CITE_INDICATED: &str = "a matching Kimura condition indicates an algebraic solution; it is not proved here";
const CITE_ORACLE: &str = "rational Riccati solutions by local exponents (Kovacic, case 1)";

fn triangular_echo(n: &Result<NormalizedTriangle, SchwarzianError>) -> TriangularEcho {
    match n {
        Ok(n) => TriangularEcho {
            recognized: true,
            map: Some(n.map.to_string()),
            coefficient: Some(n.r.to_string()),
            inverse_squares: Some(n.triangle.inverse_squares.clone().map(|q| fmt_rational(&q))),
            params: Some(n.triangle.params.clone()),
            reason: None,
        },
        Err(e) => TriangularEcho {
            recognized: false,
            map: None,
            coefficient: None,
            inverse_squares: None,
            params: None,
            reason: Some(e.to_string()),
        },
    }
}

pub fn cmd_analyze(input: &InputSpec, opts: AnalyzeOptions) -> Result<Outcome<AnalysisReport>, InputError> {
    let r = input.coefficient()?;
    let var = input.var();
    let normalized = recognize_up_to_moebius(&r);
    let triangular = triangular_echo(&normalized);
    let params = normalized.as_ref().ok().map(|n| n.triangle.params.clone());
    let verdict = params.as_ref().map(decide_condition_ric).transpose()?;
    let hyperbolic = params.as_ref().map(TriangleParams::is_hyperbolic).transpose()?;
    let kimura = params
        .as_ref()
        .zip(verdict.as_ref())
        .map(|(p, v)| KimuraEcho::new(p, v));

    let mut exit_code = EXIT_OK;
    let oracle = opts.oracle.then(|| {
        let oo = OracleOptions {
            degree_bound: opts.degree_bound,
            certify: true,
        };
        match rational_solutions(&associate_riccati(&r), oo) {
            Ok(res) => {
                let mut echo = OracleEcho::from_result(&res, var);
                if let Some(v) = &verdict {
                    let contradiction = v.holds() && res.has_rational_solution();
                    echo.consistency = Some(if contradiction { "Contradiction" } else { "Consistent" });
                    if contradiction {
                        exit_code = EXIT_INCONSISTENT;
                    }
                }
                echo
            }
            Err(e) => OracleEcho::failed(e),
        }
    });

    let (conclusion, mut citations) = match &verdict {
        Some(v) if v.holds() => (Conclusion::NoOrderTwoSubvarieties, vec![CITE_KIMURA, CITE_RIC]),
        Some(_) => (
            Conclusion::AlgebraicSolutionIndicated,
            vec![CITE_KIMURA, CITE_INDICATED],
        ),
        None => (Conclusion::NotTriangular, vec![]),
    };
    if opts.oracle {
        citations.push(CITE_ORACLE);
    }
    let report = AnalysisReport {
        input: input.echo(),
        normalized: r.fmt_in(var),
        triangular,
        hyperbolic,
        kimura,
        oracle,
        conclusion,
        citations: citations.into_iter().map(String::from).collect(),
    };
    Ok(Outcome { report, exit_code })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl Render for AnalysisReport {
    fn render_text(&self) -> String {
        let mut out = String::new();
        let mut line = |s: String| {
            out.push_str(&s);
            out.push('\n');
        };
        line(format!("input:       {} {}", self.input.kind, self.input.text));
        if let Some(m) = &self.input.moebius {
            line(format!("moebius:     {m}"));
        }
        line(format!("R({}) =      {}", self.input.variable, self.normalized));
        let t = &self.triangular;
        match (&t.params, &t.inverse_squares) {
            (Some(p), Some(sq)) => {
                line(format!("triangular:  yes, (alpha, beta, gamma) = {p} up to sign"));
                line(format!("             inverse squares {}", sq.join(", ")));
                if t.map.as_deref() != Some("1,0,0,1") {
                    line(format!(
                        "             after Moebius map {}",
                        t.map.as_deref().unwrap_or("?")
                    ));
                }
            }
            _ => line(format!(
                "triangular:  no ({})",
                t.reason.as_deref().unwrap_or("unknown")
            )),
        }
        if let Some(h) = self.hyperbolic {
            line(format!("hyperbolic:  {}", yes_no(h)));
        }
        if let Some(k) = &self.kimura {
            line(format!("Kimura:      {}", k.outcome));
            if let Some(w) = &k.witness {
                line(format!("  witness:   {w}"));
                line(format!("  replayed:  {}", yes_no(k.replayed == Some(true))));
            }
        }
        if let Some(o) = &self.oracle {
            match &o.error {
                Some(e) => line(format!("oracle:      {e}")),
                None => {
                    line(format!(
                        "oracle:      {} rational solution(s), {} famil(ies), {} candidate(s){}",
                        o.solutions.len(),
                        o.families.len(),
                        o.searched,
                        if o.complete { "" } else { ", incomplete" }
                    ));
                    for s in &o.solutions {
                        line(format!("  u = {s}"));
                    }
                    for f in &o.families {
                        line(format!("  {f}"));
                    }
                    if let Some(c) = o.consistency {
                        line(format!("  cross-check: {c}"));
                    }
                }
            }
        }
        line(format!("conclusion:  {:?}", self.conclusion));
        for c in &self.citations {
            line(format!("  - {c}"));
        }
        out
    }
}

// ------------------------------------------------------------------ sweep

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub params: TriangleParams,
    pub outcome: &'static str,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub bound: u32,
    pub triples: usize,
    pub all_hold: bool,
    pub failures: Vec<SweepRow>,
    pub cross_checked: bool,
    pub contradictions: Vec<TriangleParams>,
    pub summary: String,
    pub table: Option<Vec<SweepRow>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepOptions {
    pub bound: u32,
    pub jobs: usize,
    pub full: bool,
    pub cross_check: bool,
    pub degree_bound: usize,
}

pub fn cmd_sweep(opts: SweepOptions) -> Result<Outcome<SweepReport>, InputError> {
    if opts.bound == 0 {
        return Err(InputError::new("cli", "--bound must be a positive integer"));
    }
    let jobs = opts.jobs.max(1);
    let decided = sweep_triples(hyperbolic_integer_triples(opts.bound), jobs);
    let rows: Vec<SweepRow> = decided
        .iter()
        .map(|(p, v)| SweepRow {
            params: p.clone(),
            outcome: v.outcome_tag(),
            witness: v.witness().map(|w| w.to_string()),
        })
        .collect();
    let failures: Vec<SweepRow> = rows.iter().filter(|r| r.witness.is_some()).cloned().collect();

    let mut contradictions = Vec::new();
    if opts.cross_check {
        let oo = OracleOptions {
            degree_bound: opts.degree_bound,
            certify: false,
        };
        let check = |(p, v): &(TriangleParams, KimuraVerdict)| -> Result<Option<TriangleParams>, InputError> {
            let res = rational_solutions(&associate_riccati(&build_triangular_r(p)?), oo)?;
            Ok((v.holds() && res.has_rational_solution()).then(|| p.clone()))
        };
        let found: Vec<Option<TriangleParams>> = if jobs <= 1 {
            decided.iter().map(check).collect::<Result<_, _>>()?
        } else {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .map_err(|e| InputError::new("cli", e))?;
            pool.install(|| decided.par_iter().map(check).collect::<Result<_, _>>())?
        };
        contradictions = found.into_iter().flatten().collect();
    }

    let n = rows.len();
    let all_hold = failures.is_empty();
    let mut summary = if all_hold {
        format!("all {n} triples: ConditionRicHolds")
    } else {
        format!("{} of {n} triples: AlgebraicSolutionIndicated", failures.len())
    };
    if opts.cross_check {
        summary.push_str(&format!("; oracle contradictions: {}", contradictions.len()));
    }
    let exit_code = if all_hold && contradictions.is_empty() {
        EXIT_OK
    } else {
        EXIT_INCONSISTENT
    };
    let report = SweepReport {
        bound: opts.bound,
        triples: n,
        all_hold,
        failures,
        cross_checked: opts.cross_check,
        contradictions,
        summary,
        table: opts.full.then_some(rows),
    };
    Ok(Outcome { report, exit_code })
}

impl Render for SweepReport {
    fn render_text(&self) -> String {
        let mut out = format!("bound {}: {}\n", self.bound, self.summary);
        for f in &self.failures {
            out.push_str(&format!("  {} {}\n", f.params, f.witness.as_deref().unwrap_or("")));
        }
        for p in &self.contradictions {
            out.push_str(&format!("  CONTRADICTION at {p}\n"));
        }
        if let Some(table) = &self.table {
            for r in table {
                match &r.witness {
                    Some(w) => out.push_str(&format!("{}\t{}\t{}\n", r.params, r.outcome, w)),
                    None => out.push_str(&format!("{}\t{}\n", r.params, r.outcome)),
                }
            }
        }
        out
    }
}

// ----------------------------------------------------------- series-check

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesCheck {
    pub lambda0: String,
    pub a0: String,
    pub kind: &'static str,
    /// `da0/dy + 1/2*a0^2 + R` when `lambda0 = 0`.
    pub constraint: Option<String>,
    pub satisfied: Option<bool>,
    pub half: Option<String>,
    pub half_solves_riccati: Option<bool>,
    /// Leading residual term when `lambda0 != 0`.
    pub exponent: Option<String>,
    pub coefficient: Option<String>,
    /// `(lambda0 + 1/2)*a0^2` when `lambda0 > 0`.
    pub predicted: Option<String>,
}

impl SeriesCheck {
    fn new(c: &ConstraintReport, lambda0: &BigRat, a0: &RatFunc, var: &str) -> Self {
        let mut s = SeriesCheck {
            lambda0: fmt_rational(lambda0),
            a0: a0.fmt_in(var),
            kind: "",
            constraint: None,
            satisfied: None,
            half: None,
            half_solves_riccati: None,
            exponent: None,
            coefficient: None,
            predicted: None,
        };
        match c {
            ConstraintReport::ZeroExponent {
                constraint,
                satisfied,
                half,
                half_solves_riccati,
                ..
            } => {
                s.kind = "ZeroExponent";
                s.constraint = Some(constraint.fmt_in(var));
                s.satisfied = Some(*satisfied);
                s.half = Some(half.fmt_in(var));
                s.half_solves_riccati = Some(*half_solves_riccati);
            }
            ConstraintReport::Obstruction {
                exponent,
                coefficient,
                predicted,
                ..
            } => {
                s.kind = "Obstruction";
                s.exponent = Some(fmt_rational(exponent));
                s.coefficient = Some(coefficient.fmt_in(var));
                s.predicted = predicted.as_ref().map(|p| p.fmt_in(var));
            }
            ConstraintReport::Undetermined { .. } => s.kind = "Undetermined",
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesReport {
    pub input: InputEcho,
    pub normalized: String,
    pub lambda0: String,
    pub truncation: String,
    pub constraint: String,
    /// Where the tested `a0` came from: `given`, `oracle` or `default`.
    pub a0_source: &'static str,
    pub checks: Vec<SeriesCheck>,
    pub families: Vec<String>,
    pub forcing: Vec<SeriesCheck>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesOptions {
    pub lambda0: BigRat,
    pub a0: Option<String>,
    pub truncation: BigRat,
    pub degree_bound: usize,
}

impl Default for SeriesOptions {
    fn default() -> Self {
        SeriesOptions {
            lambda0: BigRat::zero(),
            a0: None,
            truncation: default_truncation(),
            degree_bound: OracleOptions::default().degree_bound,
        }
    }
}

/// Parse a `--lambda0` or `--truncation` value.
pub fn parse_exponent(text: &str) -> Result<BigRat, InputError> {
    parse_rational(text).map_err(|e| InputError::new("cli", e))
}

pub fn cmd_series_check(input: &InputSpec, opts: &SeriesOptions) -> Result<Outcome<SeriesReport>, InputError> {
    let r = input.coefficient()?;
    let var = input.var();
    let mut families = Vec::new();
    let (a0_source, candidates): (&'static str, Vec<RatFunc>) = match &opts.a0 {
        Some(text) => ("given", vec![parse_ratfunc(text, var)?]),
        None => {
            let oo = OracleOptions {
                degree_bound: opts.degree_bound,
                certify: false,
            };
            // a0/2 solves the Riccati equation, so rational solutions u give a0 = 2u
            let mut found = Vec::new();
            if let Ok(res) = rational_solutions(&associate_riccati(&r), oo) {
                let two = BigRat::from_integer(2.into());
                found.extend(res.solutions.iter().map(|s| s.u.scale(&two)));
                for f in &res.families {
                    families.push(f.to_string());
                    if let Some(p) = f.basis.last() {
                        found.push(f.member(p).scale(&two));
                    }
                }
            }
            found.retain(|a| !a.is_zero());
            if found.is_empty() && !opts.lambda0.is_zero() {
                ("default", vec![RatFunc::one()])
            } else {
                ("oracle", found)
            }
        }
    };
    let check = |lambda0: &BigRat, a0: &RatFunc| -> Result<SeriesCheck, InputError> {
        let c = leading_constraints(lambda0, a0, &r, &opts.truncation).map_err(|e| InputError::new("puiseux", e))?;
        Ok(SeriesCheck::new(&c, lambda0, a0, var))
    };
    let checks = candidates
        .iter()
        .map(|a0| check(&opts.lambda0, a0))
        .collect::<Result<Vec<_>, _>>()?;
    let probe = candidates.first().cloned().unwrap_or_else(RatFunc::one);
    let forcing = ["-1", "1/2", "1", "3/2"]
        .iter()
        .map(|l| check(&parse_exponent(l).expect("literal"), &probe))
        .collect::<Result<Vec<_>, _>>()?;
    let report = SeriesReport {
        input: input.echo(),
        normalized: r.fmt_in(var),
        lambda0: fmt_rational(&opts.lambda0),
        truncation: fmt_rational(&opts.truncation),
        constraint: if r.is_zero() {
            format!("da0/d{var} + 1/2*a0^2 = 0")
        } else {
            format!("da0/d{var} + 1/2*a0^2 + ({}) = 0", r.fmt_in(var))
        },
        a0_source,
        checks,
        families,
        forcing,
    };
    Ok(Outcome {
        report,
        exit_code: EXIT_OK,
    })
}

fn render_check(out: &mut String, c: &SeriesCheck) {
    match c.kind {
        "ZeroExponent" => out.push_str(&format!(
            "  a0 = {}: constraint {} ({}); a0/2 = {} {} the Riccati equation\n",
            c.a0,
            c.constraint.as_deref().unwrap_or(""),
            if c.satisfied == Some(true) {
                "satisfied"
            } else {
                "violated"
            },
            c.half.as_deref().unwrap_or(""),
            if c.half_solves_riccati == Some(true) {
                "solves"
            } else {
                "does not solve"
            },
        )),
        "Obstruction" => {
            out.push_str(&format!(
                "  lambda0 = {}, a0 = {}: residual leads with ({})*w^{}",
                c.lambda0,
                c.a0,
                c.coefficient.as_deref().unwrap_or(""),
                c.exponent.as_deref().unwrap_or("")
            ));
            if let Some(p) = &c.predicted {
                out.push_str(&format!(", predicted (lambda0 + 1/2)*a0^2 = {p}"));
            }
            out.push('\n');
        }
        _ => out.push_str(&format!(
            "  lambda0 = {}, a0 = {}: no nonzero residual term above the cutoff\n",
            c.lambda0, c.a0
        )),
    }
}

impl Render for SeriesReport {
    fn render_text(&self) -> String {
        let mut out = format!("input:      {} {}\n", self.input.kind, self.input.text);
        out.push_str(&format!("R({}) =     {}\n", self.input.variable, self.normalized));
        out.push_str(&format!(
            "ansatz:     U = a0*w^{} + O(w^{}), w = dy/dt\n",
            self.lambda0, self.truncation
        ));
        out.push_str(&format!("constraint: {}\n", self.constraint));
        out.push_str(&format!("a0 from {}:\n", self.a0_source));
        if self.checks.is_empty() {
            out.push_str("  none (no rational Riccati solution was found)\n");
        }
        for c in &self.checks {
            render_check(&mut out, c);
        }
        for f in &self.families {
            out.push_str(&format!("family:     {f}\n"));
        }
        out.push_str("nonzero lambda0 leaves a nonzero leading residual:\n");
        for c in &self.forcing {
            render_check(&mut out, c);
        }
        out
    }
}

// ----------------------------------------------------------------- oracle

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalEcho {
    pub point: String,
    pub kappa: String,
    pub exponents: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CandidateEcho {
    pub residues: Vec<String>,
    pub at_infinity: String,
    pub degree: String,
    pub status: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolutionEcho {
    pub u: String,
    pub residues: Vec<[String; 2]>,
    pub polynomial: String,
    pub linear_solution: Option<String>,
    pub residual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub input: InputEcho,
    pub normalized: String,
    pub riccati: String,
    pub linear: String,
    pub local: Vec<LocalEcho>,
    pub candidates: Vec<CandidateEcho>,
    pub solutions: Vec<SolutionEcho>,
    pub families: Vec<String>,
    pub complete: bool,
    pub kimura: Option<KimuraEcho>,
    pub consistency: Option<&'static str>,
}

fn status_text(s: &CandidateStatus) -> String {
    match s {
        CandidateStatus::DegreeRejected => "degree not a nonnegative integer".into(),
        CandidateStatus::DegreeAboveBound => "degree above bound".into(),
        CandidateStatus::NoPolynomial => "no polynomial".into(),
        CandidateStatus::Solution(i) => format!("solution {i}"),
        CandidateStatus::Family(i) => format!("family {i}"),
        CandidateStatus::Duplicate(i) => format!("duplicate of solution {i}"),
    }
}

pub fn cmd_oracle(input: &InputSpec, degree_bound: usize) -> Result<Outcome<OracleReport>, InputError> {
    let r = input.coefficient()?;
    let var = input.var();
    let eq = associate_riccati(&r);
    let res = rational_solutions(
        &eq,
        OracleOptions {
            degree_bound,
            certify: true,
        },
    )?;
    let q = fmt_rational;
    let local = res
        .certificate
        .local
        .iter()
        .map(|l| LocalEcho {
            point: l.point.to_string(),
            kappa: q(&l.kappa),
            exponents: l.exponents.iter().map(q).collect(),
        })
        .collect();
    let candidates = res
        .certificate
        .candidates
        .iter()
        .map(|c| CandidateEcho {
            residues: c.residues.iter().map(q).collect(),
            at_infinity: q(&c.at_infinity),
            degree: q(&c.degree),
            status: status_text(&c.status),
        })
        .collect();
    let solutions = res
        .solutions
        .iter()
        .map(|s| SolutionEcho {
            u: s.u.fmt_in(var),
            residues: s.residues.iter().map(|(c, e)| [q(c), q(e)]).collect(),
            polynomial: s.polynomial.fmt_in(var),
            linear_solution: s.linear_solution().map(|v| v.fmt_in(var)),
            residual: eq.residual(&s.u).fmt_in(var),
        })
        .collect();

    let recognized = recognize_up_to_moebius(&r).ok();
    let mut exit_code = EXIT_OK;
    let mut consistency = None;
    let mut kimura = None;
    if let Some(n) = recognized {
        let p = n.triangle.params;
        let v = decide_condition_ric(&p)?;
        let contradiction = v.holds() && res.has_rational_solution();
        consistency = Some(if contradiction { "Contradiction" } else { "Consistent" });
        if contradiction {
            exit_code = EXIT_INCONSISTENT;
        }
        kimura = Some(KimuraEcho::new(&p, &v));
    }
    let report = OracleReport {
        input: input.echo(),
        normalized: r.fmt_in(var),
        riccati: eq.to_string(),
        linear: to_linear_ode(&eq).to_string(),
        local,
        candidates,
        solutions,
        families: res.families.iter().map(|f| f.to_string()).collect(),
        complete: res.certificate.complete,
        kimura,
        consistency,
    };
    Ok(Outcome { report, exit_code })
}

impl Render for OracleReport {
    fn render_text(&self) -> String {
        let mut out = format!("input:    {} {}\n", self.input.kind, self.input.text);
        out.push_str(&format!("Riccati:  {}\n", self.riccati));
        out.push_str(&format!("linear:   {}\n", self.linear));
        for l in &self.local {
            out.push_str(&format!(
                "  at {}: kappa = {}, exponents {}\n",
                l.point,
                l.kappa,
                l.exponents.join(", ")
            ));
        }
        out.push_str(&format!(
            "{} candidate(s) examined{}\n",
            self.candidates.len(),
            if self.complete {
                ""
            } else {
                " (incomplete: degree bound reached)"
            }
        ));
        if self.solutions.is_empty() && self.families.is_empty() {
            out.push_str("no rational solution\n");
        }
        for s in &self.solutions {
            out.push_str(&format!("u = {}  (residual {})\n", s.u, s.residual));
            if let Some(v) = &s.linear_solution {
                out.push_str(&format!("  v = {v}\n"));
            }
        }
        for f in &self.families {
            out.push_str(&format!("{f}\n"));
        }
        if let (Some(k), Some(c)) = (&self.kimura, self.consistency) {
            out.push_str(&format!("Kimura:   {} ({c})\n", k.outcome));
        }
        out
    }
}
