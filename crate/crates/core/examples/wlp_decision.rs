//! Decide the WLP and print the per-degree ranks.

use wlp_core::monomial::MonomialIdeal;
use wlp_core::wlp::{lefschetz_quotient_series, wlp_report, WlpOptions};

fn main() {
    let ideal = MonomialIdeal::parse("x1^3,x2^3,x3^3,x1*x2*x3").unwrap();
    let report = wlp_report(&ideal, WlpOptions::certified()).unwrap();
    for r in &report.records {
        println!("degree {}: {} -> {}, rank {}", r.degree, r.dim_source, r.dim_target, r.rank);
    }
    println!("{}", report.verdict_line());
    println!("S/(I + l): {}", lefschetz_quotient_series(&report).series_string());
}
