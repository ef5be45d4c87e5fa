//! Parsing rational expressions, printing them back, and diagnostics.
//!
//! Run with `cargo run --example parse_expr -- "1/(2*y^2*(y-1)^2)"`.

use schwarzric::expr::{parse_expr, parse_ratfunc};

fn main() {
    let inputs: Vec<String> = match std::env::args().skip(1).collect::<Vec<_>>() {
        v if v.is_empty() => [
            "(y^2 - 1968*y + 2654208)/(2*y^2*(y - 1728)^2)",
            "-(y-1)^2/(3*y)",
            "y^-1",
            "1/(y - y)",
            "2 y",
        ]
        .map(String::from)
        .to_vec(),
        v => v,
    };
    for text in &inputs {
        match parse_expr(text) {
            Ok(e) => println!("{text:?}\n  tree:  {e}"),
            Err(err) => {
                println!("{text:?}\n  {err}\n  {text}\n  {}^", " ".repeat(err.offset));
                continue;
            }
        }
        match parse_ratfunc(text, "y") {
            Ok(f) => println!("  value: {f}"),
            Err(err) => println!("  {err}"),
        }
    }
}
