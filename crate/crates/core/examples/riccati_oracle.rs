//! Rational solutions of u' + u² + ½R = 0 found from local exponents.
//!
//! Run with `cargo run --example riccati_oracle`.

use schwarzric::riccati::{cross_check, rational_solutions_for, OracleOptions};
use schwarzric::schwarzian::TriangleParams;

fn main() {
    let opts = OracleOptions::default();
    for text in ["1,inf,inf", "1,1,1", "2,3,4", "2,3,7", "inf,inf,inf"] {
        let p: TriangleParams = text.parse().expect("triangle");
        let res = rational_solutions_for(&p, opts).expect("regular singular");
        println!("({text}): {} candidates examined", res.certificate.candidates.len());
        for s in &res.solutions {
            println!("  u = {}", s.u);
        }
        for f in &res.families {
            println!("  family {f}");
        }
        let report = cross_check(&p, opts).expect("regular singular");
        println!("  {:?}: {}", report.status, report.note);
    }
}
