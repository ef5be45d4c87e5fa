//! Leading-order balance of a Puiseux ansatz U = a₀·w^λ₀ + … in w = y'.
//!
//! Run with `cargo run --example puiseux_balance`.

use schwarzric::arith::{int, rat, BigRat};
use schwarzric::expr::parse_ratfunc;
use schwarzric::puiseux::{leading_constraints, ConstraintReport};
use schwarzric::schwarzian::{build_triangular_r, TriangleParams};

fn main() {
    let p: TriangleParams = "1,inf,inf".parse().expect("triangle");
    let r = build_triangular_r(&p).expect("nonzero parameters");
    let truncation = int(-5);

    // λ₀ = 0: a₀ must satisfy ∂a₀ + ½a₀² + R = 0, i.e. a₀/2 solves the Riccati equation
    for a0 in ["1/y + 1/(y - 1)", "1/y"] {
        let a = parse_ratfunc(a0, "y").expect("valid expression");
        let c = leading_constraints(&BigRat::from(int(0)), &a, &r, &truncation).expect("nonzero a0");
        if let ConstraintReport::ZeroExponent {
            constraint,
            satisfied,
            half,
            half_solves_riccati,
            ..
        } = c
        {
            println!("lambda0 = 0, a0 = {a0}: constraint {constraint} (zero: {satisfied})");
            println!("  u = a0/2 = {half} solves the Riccati equation: {half_solves_riccati}");
        }
    }

    // λ₀ > 0: the residual starts at w^{2λ₀} with coefficient (λ₀ + ½)a₀²
    let a = parse_ratfunc("y", "y").expect("valid expression");
    for lambda0 in [rat(1, 2), int(1), rat(3, 2)] {
        let c = leading_constraints(&lambda0, &a, &r, &truncation).expect("nonzero a0");
        if let ConstraintReport::Obstruction {
            exponent,
            coefficient,
            predicted,
            ..
        } = c
        {
            let predicted = predicted.map_or("none".to_string(), |p| p.to_string());
            println!("lambda0 = {lambda0}: leading term ({coefficient})*w^{exponent}, predicted {predicted}");
        }
    }
}
