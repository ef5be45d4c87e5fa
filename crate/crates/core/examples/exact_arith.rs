//! Exact arithmetic in ℚ and ℚ(y): gcds, partial fractions, rational roots.
//!
//! Run with `cargo run --example exact_arith`.

use schwarzric::arith::{partial_fractions, rat, Poly, RatFunc};
use schwarzric::expr::parse_ratfunc;

fn main() {
    let a = Poly::from_i64(&[-6, 11, -6, 1]); // (y-1)(y-2)(y-3)
    let b = Poly::from_i64(&[2, -3, 1]); // (y-1)(y-2)
    println!("gcd({a}, {b}) = {}", a.gcd(&b));

    let q = &Poly::from_coeffs(vec![rat(-1, 1728), rat(1, 1)]) * &Poly::from_i64(&[3, 7]);
    for (root, mult) in q.rational_roots() {
        println!("root of {q}: {root} (multiplicity {mult})");
    }

    let r = parse_ratfunc("(y^3 + 1)/(y^2*(y - 2))", "y").expect("valid expression");
    let pf = partial_fractions(&r).expect("denominator splits over Q");
    println!("{r} =");
    println!("  {}", pf.polynomial);
    for t in &pf.terms {
        println!("  + {}/(y - {})^{}", t.coefficient, t.pole, t.order);
    }
    assert_eq!(pf.recombine(), r);

    let f = RatFunc::x().pow(-2).expect("y is nonzero");
    println!("d/dy {f} = {}", f.derivative());
}
