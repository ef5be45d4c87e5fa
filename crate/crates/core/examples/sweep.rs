//! Condition Ric over all hyperbolic integer triples up to a bound.
//!
//! Run with `cargo run --release --example sweep -- 60`.

use std::time::Instant;

use schwarzric::kimura::hyperbolic_integer_sweep;

fn main() {
    let bound: u32 = std::env::args()
        .nth(1)
        .map_or(30, |s| s.parse().expect("bound is an integer"));
    let start = Instant::now();
    let results = hyperbolic_integer_sweep(bound);
    let failures: Vec<_> = results.iter().filter(|(_, v)| !v.holds()).collect();
    println!(
        "bound {bound}: {} triples, {} with a witness, {:.2?}",
        results.len(),
        failures.len(),
        start.elapsed()
    );
    for (p, v) in failures {
        println!("  {p}: {}", v.outcome_tag());
    }
}
