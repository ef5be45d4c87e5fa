//! Building, recognizing and transporting triangular coefficients, ending
//! with the j-function normalization y ↦ 1728y.
//!
//! Run with `cargo run --example triangular_form`.

use num_traits::Zero;

use schwarzric::arith::{BigRat, RatFunc};
use schwarzric::schwarzian::{
    build_triangular_r, moebius_pullback, recognize_triangular, recognize_up_to_moebius, Moebius, TriangleParams,
};

fn main() {
    let p: TriangleParams = "2,3,7".parse().expect("triangle");
    let r = build_triangular_r(&p).expect("nonzero parameters");
    println!("R_{{2,3,7}} = {r}");
    let rec = recognize_triangular(&r).expect("triangular");
    println!(
        "recognized inverse squares: {:?}",
        rec.inverse_squares.map(|q| q.to_string())
    );

    let j: TriangleParams = "inf,3,2".parse().expect("triangle");
    let r = build_triangular_r(&j).expect("nonzero parameters");
    let m = Moebius::from_i64(1728, 0, 0, 1).expect("invertible");
    let pulled = moebius_pullback(&r, &m).expect("invertible");
    println!("R_{{inf,3,2}} after y -> 1728y: {}", pulled.fmt_in("z"));

    // z²·R̃ at z = 0 gives (1 - 1/β²)/2 for β = 3
    let limit = (&pulled * &(&RatFunc::x() * &RatFunc::x()))
        .eval(&BigRat::zero())
        .expect("regular");
    println!("z^2 R(z) at z = 0: {limit}");

    let n = recognize_up_to_moebius(&pulled).expect("three singular points");
    println!("normalizing map {} gives parameters {}", n.map, n.triangle.params);
}
