//! The Schwarzian derivative and its invariance under Möbius maps.
//!
//! Run with `cargo run --example schwarzian`.

use schwarzric::arith::RatFunc;
use schwarzric::expr::parse_ratfunc;
use schwarzric::schwarzian::{check_solution, schwarzian_of, Moebius};

fn main() {
    let g = parse_ratfunc("(y^3 - 2)/(y + 1)", "y").expect("valid expression");
    let m = Moebius::from_i64(2, -1, 1, 3).expect("nonzero determinant");
    let mg = m.as_ratfunc().compose(&g).expect("composable");

    let s = schwarzian_of(&g).expect("g is not constant");
    println!("g      = {g}");
    println!("S(g)   = {s}");
    println!("m      = {}", m.as_ratfunc());
    println!("S(m∘g) = {}", schwarzian_of(&mg).expect("m∘g is not constant"));
    println!(
        "S(m)   = {}",
        schwarzian_of(&m.as_ratfunc()).expect("m is not constant")
    );

    // S(g) = 0 exactly for Möbius g
    for text in ["(3*y - 1)/(y + 4)", "y^2", "1/y"] {
        let g = parse_ratfunc(text, "y").expect("valid expression");
        let solves = check_solution(&g, &RatFunc::zero()).expect("g is not constant");
        println!("S({text}) = 0: {solves}");
    }
}
