//! Deciding Condition Ric from Kimura's table, with witnesses.
//!
//! Run with `cargo run --example kimura_table`.

use schwarzric::kimura::{decide_condition_ric, matching_rows, verify_witness, TABLE};
use schwarzric::schwarzian::TriangleParams;

fn main() {
    println!("{} rows:", TABLE.len());
    for row in TABLE.iter() {
        println!("  {row}");
    }
    for text in ["2,3,7", "2,3,inf", "2,3,4", "2,2,9", "5/2,3,3", "1,inf,inf"] {
        let p: TriangleParams = text.parse().expect("triangle");
        let v = decide_condition_ric(&p).expect("nonzero parameters");
        match v.witness() {
            None => println!("({text}): {}", v.outcome_tag()),
            Some(w) => println!(
                "({text}): {}, {w}, replayed: {}",
                v.outcome_tag(),
                verify_witness(&p, w)
            ),
        }
    }
    let p: TriangleParams = "2,2,2".parse().expect("triangle");
    let rows = matching_rows(&p).expect("nonzero parameters");
    println!("(2,2,2) matches {} rows", rows.len());
}
