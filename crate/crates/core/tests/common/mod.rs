//! Strategies and independent oracles shared by the integration tests.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use schwarzric::arith::{int, rat, BigRat, Poly, RatFunc};
use schwarzric::expr::Expr;
use schwarzric::schwarzian::{Moebius, TriangleParams};
use schwarzric::ExtRational;

pub fn small_rat() -> impl Strategy<Value = BigRat> {
    (-12i64..=12, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

pub fn nonzero_rat() -> impl Strategy<Value = BigRat> {
    small_rat().prop_filter("nonzero", |q| !q.is_zero())
}

pub fn poly(max_len: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(small_rat(), 0..=max_len).prop_map(Poly::from_coeffs)
}

pub fn nonzero_poly(max_len: usize) -> impl Strategy<Value = Poly> {
    poly(max_len).prop_filter("nonzero", |p| !p.is_zero())
}

pub fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (poly(4), nonzero_poly(3)).prop_map(|(n, d)| RatFunc::new(n, d).unwrap())
}

/// Rational functions that are not constant.
pub fn nonconstant_ratfunc() -> impl Strategy<Value = RatFunc> {
    ratfunc().prop_filter("nonconstant", |f| !f.is_constant())
}

pub fn moebius() -> impl Strategy<Value = Moebius> {
    (small_rat(), small_rat(), small_rat(), small_rat())
        .prop_filter_map("invertible", |(a, b, c, d)| Moebius::new(a, b, c, d).ok())
}

/// A parameter: `inf`, or `±n/d` with small `n, d`.
pub fn param() -> impl Strategy<Value = ExtRational> {
    prop_oneof![
        1 => Just(ExtRational::Infinity),
        6 => (1i64..=12, 1i64..=6, any::<bool>())
            .prop_map(|(n, d, neg)| ExtRational::Finite(rat(if neg { -n } else { n }, d))),
    ]
}

pub fn triangle() -> impl Strategy<Value = TriangleParams> {
    (param(), param(), param()).prop_map(|(alpha, beta, gamma)| TriangleParams { alpha, beta, gamma })
}

/// Nonnegative-representative triangles, as produced by recognition.
pub fn positive_triangle() -> impl Strategy<Value = TriangleParams> {
    triangle().prop_map(|p| {
        let abs = |x: ExtRational| match x {
            ExtRational::Finite(q) => ExtRational::Finite(q.abs()),
            inf => inf,
        };
        TriangleParams {
            alpha: abs(p.alpha),
            beta: abs(p.beta),
            gamma: abs(p.gamma),
        }
    })
}

pub fn expr_tree() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        (0u32..40).prop_map(|n| Expr::Int(BigInt::from(n))),
        prop::sample::select(vec!["y", "t", "x1"]).prop_map(|v| Expr::Var(v.to_string())),
    ];
    leaf.prop_recursive(5, 48, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|e| Expr::Neg(Box::new(e))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Add(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Sub(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Mul(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Div(Box::new(a), Box::new(b))),
            (inner, 0u32..4).prop_map(|(a, k)| Expr::Pow(Box::new(a), k)),
        ]
    })
}

/// `g'''/g' - (3/2)(g''/g')²`, a second route to the Schwarzian.
pub fn schwarzian_classical(g: &RatFunc) -> RatFunc {
    let g1 = g.derivative();
    let g2 = g1.derivative();
    let g3 = g2.derivative();
    let ratio = g2.checked_div(&g1).unwrap();
    let cube = g3.checked_div(&g1).unwrap();
    &cube - &(&ratio * &ratio).scale(&rat(3, 2))
}

// Kimura's list, typed independently of the library constant. `None` marks
// the arbitrary column; the flag marks rows with the ℓ+m+n parity condition.
type Cell = Option<(i64, i64)>;
pub const KIMURA_ROWS: [([Cell; 3], bool); 15] = [
    ([Some((1, 2)), Some((1, 2)), None], false),
    ([Some((1, 2)), Some((1, 2)), Some((1, 2))], false),
    ([Some((2, 3)), Some((1, 3)), Some((1, 4))], true),
    ([Some((1, 2)), Some((1, 3)), Some((1, 4))], false),
    ([Some((2, 3)), Some((1, 4)), Some((1, 4))], true),
    ([Some((1, 2)), Some((1, 3)), Some((1, 5))], false),
    ([Some((2, 5)), Some((1, 3)), Some((1, 3))], true),
    ([Some((2, 3)), Some((1, 5)), Some((1, 5))], true),
    ([Some((1, 2)), Some((2, 5)), Some((1, 5))], true),
    ([Some((3, 5)), Some((1, 3)), Some((1, 5))], true),
    ([Some((2, 5)), Some((2, 5)), Some((2, 5))], true),
    ([Some((2, 3)), Some((1, 3)), Some((1, 5))], true),
    ([Some((4, 5)), Some((1, 5)), Some((1, 5))], true),
    ([Some((1, 2)), Some((2, 5)), Some((1, 3))], true),
    ([Some((3, 5)), Some((2, 5)), Some((1, 3))], true),
];

/// First matching row (1-based) by brute force over all orderings and
/// signs, or `None`.
pub fn brute_force_row(x: &[BigRat; 3]) -> Option<u8> {
    let orders = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    for (idx, (cells, parity)) in KIMURA_ROWS.iter().enumerate() {
        for ord in orders {
            for mask in 0..8u8 {
                let mut total = BigInt::zero();
                let mut ok = true;
                for col in 0..3 {
                    let sign = if mask & (1 << col) != 0 {
                        -BigRat::one()
                    } else {
                        BigRat::one()
                    };
                    let v = sign * &x[ord[col]];
                    if let Some((n, d)) = cells[col] {
                        let k = v - rat(n, d);
                        if !k.is_integer() {
                            ok = false;
                            break;
                        }
                        total += k.to_integer();
                    }
                }
                if ok && (!parity || total.is_even()) {
                    return Some(idx as u8 + 1);
                }
            }
        }
    }
    None
}

/// Whether one of `±x₁ ± x₂ ± x₃` is an odd integer (the sign of the whole
/// sum does not matter, so four patterns cover all eight).
pub fn brute_force_odd_sum(x: &[BigRat; 3]) -> bool {
    (0..8u8).any(|mask| {
        let s: BigRat = (0..3)
            .map(|i| {
                if mask & (1 << i) != 0 {
                    -x[i].clone()
                } else {
                    x[i].clone()
                }
            })
            .sum();
        s.is_integer() && s.to_integer().is_odd()
    })
}

/// Replay a witness against the independently typed table: every filled
/// column must satisfy `sign·x = q + k` with the recorded integer `k`, the
/// parity flag must hold, and an odd sum must really be that odd integer.
pub fn replay_witness(x: &[BigRat; 3], w: &schwarzric::kimura::KimuraWitness) -> bool {
    use schwarzric::kimura::KimuraWitness;
    match w {
        KimuraWitness::Table {
            row,
            permutation,
            signs,
            integers,
        } => {
            let Some((cells, parity)) = KIMURA_ROWS.get(usize::from(*row).wrapping_sub(1)) else {
                return false;
            };
            let mut perm = *permutation;
            perm.sort_unstable();
            if perm != [0, 1, 2] {
                return false;
            }
            let mut total = BigInt::zero();
            for col in 0..3 {
                let v = BigRat::from_integer(BigInt::from(signs[col])) * &x[permutation[col]];
                match (cells[col], &integers[col]) {
                    (Some((n, d)), Some(k)) => {
                        if v != rat(n, d) + BigRat::from_integer(k.clone()) {
                            return false;
                        }
                        total += k;
                    }
                    (None, None) => {}
                    _ => return false,
                }
            }
            signs.iter().all(|s| s.abs() == 1) && (!parity || total.is_even())
        }
        KimuraWitness::OddSum { signs, value } => {
            let s: BigRat = (0..3)
                .map(|i| BigRat::from_integer(BigInt::from(signs[i])) * &x[i])
                .sum();
            signs.iter().all(|s| s.abs() == 1) && value.is_odd() && s == BigRat::from_integer(value.clone())
        }
    }
}

pub fn y() -> RatFunc {
    RatFunc::x()
}

pub fn c(n: i64) -> RatFunc {
    RatFunc::constant(int(n))
}
