//! Tensoring with k[y1,y2]/(y1^d,y2^d) moves a failure up by d-1.

use wlp_core::constructions::{extend_by_ci_square, togliatti_ci};
use wlp_core::wlp::{wlp_report, WlpOptions};

fn main() {
    let mut r = togliatti_ci().unwrap();
    for _ in 0..2 {
        let report = wlp_report(&r.ideal, WlpOptions::certified()).unwrap();
        println!("{} vars: {}  ({})", r.n, report.verdict_line(), r.expected_failure_text());
        for w in &r.witnesses {
            println!("  {:?} witness of degree {}: holds {}", w.kind, w.degree(), w.holds_for(&r.ideal));
        }
        r = extend_by_ci_square(r).unwrap();
    }
}
