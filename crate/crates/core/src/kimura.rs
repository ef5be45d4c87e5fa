//! Kimura's classification of triangular Riccati equations with algebraic
//! solutions.
//!
//! For `u' + u² + ½R_{α,β,γ} = 0` an algebraic solution can only exist when
//! one of two conditions fires:
//!
//! 1. up to order and sign, `(α⁻¹, β⁻¹, γ⁻¹)` lies in one of fifteen cosets
//!    `(q₁ + ℓ, q₂ + m, q₃ + n)` listed in [`TABLE`], some of which also
//!    require `ℓ + m + n` to be even;
//! 2. one of `±α⁻¹ ± β⁻¹ ± γ⁻¹` (at most one minus sign) is an odd integer.
//!
//! When neither fires, the Riccati equation has no algebraic solution
//! (Condition Ric). Every search here is exhaustive and deterministic.

use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use rayon::prelude::*;

use crate::arith::{fmt_rational, is_integer, rat, BigRat, ExtRational};
use crate::schwarzian::{SchwarzianError, TriangleParams};

/// One slot of a table row: `q + ℤ` or no constraint.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Slot {
    /// `numerator/denominator + ℤ`.
    Coset(i64, i64),
    Arbitrary,
}

impl Slot {
    pub fn value(&self) -> Option<BigRat> {
        match *self {
            Slot::Coset(n, d) => Some(rat(n, d)),
            Slot::Arbitrary => None,
        }
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slot::Coset(n, d) => write!(f, "{n}/{d}"),
            Slot::Arbitrary => f.write_str("arbitrary"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub index: u8,
    pub slots: [Slot; 3],
    /// `ℓ + m + n` must be even.
    pub parity: bool,
}

impl fmt::Display for TableRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.slots;
        write!(f, "{:>2}: ({a}, {b}, {c})", self.index)?;
        if self.parity {
            f.write_str(", l + m + n even")?;
        }
        Ok(())
    }
}

const fn row(index: u8, a: (i64, i64), b: (i64, i64), c: (i64, i64), parity: bool) -> TableRow {
    TableRow {
        index,
        slots: [Slot::Coset(a.0, a.1), Slot::Coset(b.0, b.1), Slot::Coset(c.0, c.1)],
        parity,
    }
}

pub const TABLE: [TableRow; 15] = [
    TableRow {
        index: 1,
        slots: [Slot::Coset(1, 2), Slot::Coset(1, 2), Slot::Arbitrary],
        parity: false,
    },
    row(2, (1, 2), (1, 2), (1, 2), false),
    row(3, (2, 3), (1, 3), (1, 4), true),
    row(4, (1, 2), (1, 3), (1, 4), false),
    row(5, (2, 3), (1, 4), (1, 4), true),
    row(6, (1, 2), (1, 3), (1, 5), false),
    row(7, (2, 5), (1, 3), (1, 3), true),
    row(8, (2, 3), (1, 5), (1, 5), true),
    row(9, (1, 2), (2, 5), (1, 5), true),
    row(10, (3, 5), (1, 3), (1, 5), true),
    row(11, (2, 5), (2, 5), (2, 5), true),
    row(12, (2, 3), (1, 3), (1, 5), true),
    row(13, (4, 5), (1, 5), (1, 5), true),
    row(14, (1, 2), (2, 5), (1, 3), true),
    row(15, (3, 5), (2, 5), (1, 3), true),
];

/// Slot permutations in lexicographic order; `perm[i]` is the parameter
/// (0 = α, 1 = β, 2 = γ) placed in table column `i`.
pub const PERMUTATIONS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

/// Sign patterns in order `+++, ++-, +-+, …, ---`.
pub const SIGN_PATTERNS: [[i8; 3]; 8] = [
    [1, 1, 1],
    [1, 1, -1],
    [1, -1, 1],
    [1, -1, -1],
    [-1, 1, 1],
    [-1, 1, -1],
    [-1, -1, 1],
    [-1, -1, -1],
];

/// Signs of `(α⁻¹, β⁻¹, γ⁻¹)` in the four sums of condition (2), in order.
pub const SUM_PATTERNS: [[i8; 3]; 4] = [[1, 1, 1], [-1, 1, 1], [1, -1, 1], [1, 1, -1]];

pub const TABLE_ASSIGNMENTS: usize = 15 * 6 * 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KimuraWitness {
    /// Condition (1): `signs[i]·x[permutation[i]] = q_i + integers[i]` for
    /// every column `i` of `row` (no integer for an arbitrary column).
    Table {
        row: u8,
        permutation: [usize; 3],
        signs: [i8; 3],
        integers: [Option<BigInt>; 3],
    },
    /// Condition (2): `Σ signs[i]·x[i] = value`, an odd integer.
    OddSum { signs: [i8; 3], value: BigInt },
}

impl KimuraWitness {
    pub fn condition(&self) -> u8 {
        match self {
            KimuraWitness::Table { .. } => 1,
            KimuraWitness::OddSum { .. } => 2,
        }
    }
}

const PARAM_NAMES: [&str; 3] = ["α", "β", "γ"];

fn sign_char(s: i8) -> char {
    if s < 0 {
        '-'
    } else {
        '+'
    }
}

impl fmt::Display for KimuraWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KimuraWitness::Table {
                row,
                permutation,
                signs,
                integers,
            } => {
                let r = &TABLE[*row as usize - 1];
                write!(f, "condition (1), row {row}:")?;
                for i in 0..3 {
                    let lhs = format!("{}{}⁻¹", sign_char(signs[i]), PARAM_NAMES[permutation[i]]);
                    match (&r.slots[i], &integers[i]) {
                        (Slot::Coset(..), Some(k)) => write!(f, " {lhs} = {} + {k};", r.slots[i])?,
                        _ => write!(f, " {lhs} arbitrary;")?,
                    }
                }
                if r.parity {
                    let total: BigInt = integers.iter().flatten().sum();
                    write!(f, " ℓ+m+n = {total} (even)")?;
                }
                Ok(())
            }
            KimuraWitness::OddSum { signs, value } => {
                let terms: Vec<String> = (0..3)
                    .map(|i| format!("{}{}⁻¹", sign_char(signs[i]), PARAM_NAMES[i]))
                    .collect();
                write!(f, "condition (2): {} = {value} (odd)", terms.join(" "))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KimuraVerdict {
    /// Both conditions were searched exhaustively without a match.
    ConditionRicHolds {
        assignments_examined: usize,
        sums_examined: usize,
    },
    AlgebraicSolutionIndicated(KimuraWitness),
}

impl KimuraVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, KimuraVerdict::ConditionRicHolds { .. })
    }

    pub fn witness(&self) -> Option<&KimuraWitness> {
        match self {
            KimuraVerdict::AlgebraicSolutionIndicated(w) => Some(w),
            KimuraVerdict::ConditionRicHolds { .. } => None,
        }
    }

    pub fn outcome_tag(&self) -> &'static str {
        match self {
            KimuraVerdict::ConditionRicHolds { .. } => "ConditionRicHolds",
            KimuraVerdict::AlgebraicSolutionIndicated(_) => "AlgebraicSolutionIndicated",
        }
    }
}

/// Distinct fractions appearing in the table; a residue is matched by its
/// index here, so the inner search compares bytes instead of rationals.
const FRACTION_CODES: [(i64, i64); 8] = [(1, 2), (1, 3), (2, 3), (1, 4), (1, 5), (2, 5), (3, 5), (4, 5)];
const NO_CODE: u8 = u8::MAX;

fn fraction_code(q: &BigRat) -> u8 {
    FRACTION_CODES
        .iter()
        .position(|&(n, d)| q.numer() == &BigInt::from(n) && q.denom() == &BigInt::from(d))
        .map_or(NO_CODE, |i| i as u8)
}

/// `ε·x` split as `floor + frac` for both signs, computed once per parameter.
#[derive(Clone, Debug)]
struct SignedResidues {
    /// index 0: `+x`, index 1: `-x`
    code: [u8; 2],
    floor: [BigInt; 2],
}

impl SignedResidues {
    fn new(x: &BigRat) -> Self {
        let split = |v: BigRat| {
            let fl = v.floor();
            (fraction_code(&(&v - &fl)), fl.to_integer())
        };
        let (fp, ip) = split(x.clone());
        let (fm, im) = split(-x);
        SignedResidues {
            code: [fp, fm],
            floor: [ip, im],
        }
    }

    fn idx(sign: i8) -> usize {
        usize::from(sign < 0)
    }
}

struct TableFractions {
    codes: Vec<[Option<u8>; 3]>,
}

impl TableFractions {
    fn get() -> &'static TableFractions {
        static CODES: OnceLock<TableFractions> = OnceLock::new();
        CODES.get_or_init(TableFractions::new)
    }

    fn new() -> Self {
        let code = |slot: &Slot| slot.value().map(|q| fraction_code(&q));
        TableFractions {
            codes: TABLE
                .iter()
                .map(|r| [code(&r.slots[0]), code(&r.slots[1]), code(&r.slots[2])])
                .collect(),
        }
    }
}

/// Try one row against precomputed residues, in tie-break order. Returns the
/// witness (if any) and the number of assignments examined.
fn search_row(
    row: &TableRow,
    codes: &[Option<u8>; 3],
    residues: &[SignedResidues; 3],
) -> (Option<KimuraWitness>, usize) {
    let per_row = PERMUTATIONS.len() * SIGN_PATTERNS.len();
    // a column whose fraction no signed parameter reaches rules out the row
    let reachable = |c: u8| residues.iter().any(|r| r.code.contains(&c));
    if codes.iter().flatten().any(|&c| !reachable(c)) {
        return (None, per_row);
    }
    let mut examined = 0;
    for perm in PERMUTATIONS {
        for signs in SIGN_PATTERNS {
            examined += 1;
            let fits = (0..3).all(|col| match codes[col] {
                None => true,
                Some(c) => residues[perm[col]].code[SignedResidues::idx(signs[col])] == c,
            });
            if !fits {
                continue;
            }
            let integers: [Option<BigInt>; 3] = std::array::from_fn(|col| {
                codes[col].map(|_| residues[perm[col]].floor[SignedResidues::idx(signs[col])].clone())
            });
            if row.parity {
                let total: BigInt = integers.iter().flatten().sum();
                if total.is_odd() {
                    continue;
                }
            }
            return (
                Some(KimuraWitness::Table {
                    row: row.index,
                    permutation: perm,
                    signs,
                    integers,
                }),
                examined,
            );
        }
    }
    (None, examined)
}

fn residues_of(inv: &[BigRat; 3]) -> [SignedResidues; 3] {
    [
        SignedResidues::new(&inv[0]),
        SignedResidues::new(&inv[1]),
        SignedResidues::new(&inv[2]),
    ]
}

fn condition_one_residues(
    residues: &[SignedResidues; 3],
    fractions: &TableFractions,
) -> (Option<KimuraWitness>, usize) {
    let mut examined = 0;
    for (row, codes) in TABLE.iter().zip(&fractions.codes) {
        let (w, n) = search_row(row, codes, residues);
        examined += n;
        if w.is_some() {
            return (w, examined);
        }
    }
    (None, examined)
}

fn condition_two_inverses(inv: &[BigRat; 3]) -> Option<KimuraWitness> {
    SUM_PATTERNS.iter().find_map(|signs| {
        let sum: BigRat = (0..3)
            .map(|i| if signs[i] < 0 { -&inv[i] } else { inv[i].clone() })
            .sum();
        (is_integer(&sum) && sum.numer().is_odd()).then(|| KimuraWitness::OddSum {
            signs: *signs,
            value: sum.to_integer(),
        })
    })
}

/// Condition (1): the first table match by row, then permutation, then signs.
pub fn condition_one(p: &TriangleParams) -> Result<Option<KimuraWitness>, SchwarzianError> {
    Ok(condition_one_counted(p)?.0)
}

/// Like [`condition_one`], also reporting how many of the 720 assignments
/// were examined.
pub fn condition_one_counted(p: &TriangleParams) -> Result<(Option<KimuraWitness>, usize), SchwarzianError> {
    let residues = residues_of(&p.inverses()?);
    Ok(condition_one_residues(&residues, TableFractions::get()))
}

/// Condition (2): the first of the four sums that is an odd integer.
pub fn condition_two(p: &TriangleParams) -> Result<Option<KimuraWitness>, SchwarzianError> {
    Ok(condition_two_inverses(&p.inverses()?))
}

fn decide_from(inv: &[BigRat; 3], residues: &[SignedResidues; 3], fr: &TableFractions) -> KimuraVerdict {
    let (w, examined) = condition_one_residues(residues, fr);
    if let Some(w) = w {
        return KimuraVerdict::AlgebraicSolutionIndicated(w);
    }
    match condition_two_inverses(inv) {
        Some(w) => KimuraVerdict::AlgebraicSolutionIndicated(w),
        None => KimuraVerdict::ConditionRicHolds {
            assignments_examined: examined,
            sums_examined: SUM_PATTERNS.len(),
        },
    }
}

pub fn decide_condition_ric(p: &TriangleParams) -> Result<KimuraVerdict, SchwarzianError> {
    let inv = p.inverses()?;
    Ok(decide_from(&inv, &residues_of(&inv), TableFractions::get()))
}

/// Search a single table row (all permutations and signs).
pub fn row_match(p: &TriangleParams, row_index: u8) -> Result<Option<KimuraWitness>, SchwarzianError> {
    let row = TABLE
        .get(usize::from(row_index).wrapping_sub(1))
        .expect("row index in 1..=15");
    let codes = TableFractions::get().codes[usize::from(row.index) - 1];
    Ok(search_row(row, &codes, &residues_of(&p.inverses()?)).0)
}

/// The first witness of every row that matches, in row order.
pub fn matching_rows(p: &TriangleParams) -> Result<Vec<KimuraWitness>, SchwarzianError> {
    let residues = residues_of(&p.inverses()?);
    let fractions = TableFractions::get();
    Ok(TABLE
        .iter()
        .zip(&fractions.codes)
        .filter_map(|(row, codes)| search_row(row, codes, &residues).0)
        .collect())
}

/// Whether `±x ∈ q + ℤ` for some sign, with `x` a parameter inverse.
pub fn slot_admits(x_inverse: &BigRat, slot: Slot) -> bool {
    match slot.value() {
        None => true,
        Some(q) => is_integer(&(x_inverse - &q)) || is_integer(&(-x_inverse - &q)),
    }
}

/// Independent replay of a witness against the raw table data.
pub fn verify_witness(p: &TriangleParams, w: &KimuraWitness) -> bool {
    let Ok(x) = p.inverses() else { return false };
    match w {
        KimuraWitness::Table {
            row,
            permutation,
            signs,
            integers,
        } => {
            let Some(r) = TABLE.iter().find(|r| r.index == *row) else {
                return false;
            };
            let mut seen = [false; 3];
            for &j in permutation {
                if j > 2 || seen[j] {
                    return false;
                }
                seen[j] = true;
            }
            for col in 0..3 {
                if signs[col].abs() != 1 {
                    return false;
                }
                let value = BigRat::from_integer(signs[col].into()) * &x[permutation[col]];
                match (r.slots[col].value(), &integers[col]) {
                    (None, None) => {}
                    (Some(q), Some(k)) => {
                        if value != q + BigRat::from_integer(k.clone()) {
                            return false;
                        }
                    }
                    _ => return false,
                }
            }
            if r.parity {
                let total: BigInt = integers.iter().flatten().sum();
                if total.is_odd() {
                    return false;
                }
            }
            true
        }
        KimuraWitness::OddSum { signs, value } => {
            if !SUM_PATTERNS.contains(signs) {
                return false;
            }
            let sum: BigRat = (0..3).map(|i| BigRat::from_integer(signs[i].into()) * &x[i]).sum();
            sum == BigRat::from_integer(value.clone()) && value.is_odd()
        }
    }
}

/// All sorted triples `α ≤ β ≤ γ` from `{2, …, bound} ∪ {∞}` with
/// `1/α + 1/β + 1/γ < 1`.
pub fn hyperbolic_integer_triples(bound: u32) -> Vec<TriangleParams> {
    let mut values: Vec<ExtRational> = (2..=bound as i64).map(ExtRational::int).collect();
    values.push(ExtRational::Infinity);
    let inv: Vec<BigRat> = values.iter().map(|v| v.inverse().expect("nonzero")).collect();
    let one = BigRat::from_integer(1.into());
    let mut out = Vec::new();
    for i in 0..values.len() {
        for j in i..values.len() {
            for k in j..values.len() {
                if &inv[i] + &inv[j] + &inv[k] < one {
                    out.push(TriangleParams {
                        alpha: values[i].clone(),
                        beta: values[j].clone(),
                        gamma: values[k].clone(),
                    });
                }
            }
        }
    }
    out
}

/// Decide every hyperbolic integer triple up to `bound`, in enumeration order.
pub fn hyperbolic_integer_sweep(bound: u32) -> Vec<(TriangleParams, KimuraVerdict)> {
    sweep_triples(hyperbolic_integer_triples(bound), 1)
}

/// Decide a list of triples on `jobs` worker threads; output keeps input order.
pub fn sweep_triples(triples: Vec<TriangleParams>, jobs: usize) -> Vec<(TriangleParams, KimuraVerdict)> {
    let fractions = TableFractions::get();
    let decide = |p: TriangleParams| {
        let inv = p.inverses().expect("sweep parameters are nonzero");
        let v = decide_from(&inv, &residues_of(&inv), fractions);
        (p, v)
    };
    if jobs <= 1 {
        return triples.into_iter().map(decide).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    pool.install(|| triples.into_par_iter().map(decide).collect())
}

/// `(α⁻¹, β⁻¹, γ⁻¹)` rendered for diagnostics.
pub fn fmt_inverses(p: &TriangleParams) -> String {
    match p.inverses() {
        Ok(v) => format!(
            "({}, {}, {})",
            fmt_rational(&v[0]),
            fmt_rational(&v[1]),
            fmt_rational(&v[2])
        ),
        Err(e) => e.to_string(),
    }
}
