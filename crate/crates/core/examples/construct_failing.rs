//! Build a failing ideal for (n, d, mu) and confirm it.
//!
//! `cargo run --example construct_failing -- 8 4 13`

use wlp_core::constructions::construct_failing_ideal;
use wlp_core::wlp::{degree_record, WlpOptions};

fn main() {
    let args: Vec<u64> = std::env::args().skip(1).map(|a| a.parse().expect("integer")).collect();
    let (n, d, mu) = match args[..] {
        [n, d, mu] => (n as u32, d as u32, mu),
        _ => (8, 4, 13),
    };
    let r = construct_failing_ideal(n, d, mu).unwrap();
    let lineage: Vec<_> = r.lineage().iter().map(|f| f.tag()).collect();
    println!("{}", r.ideal.to_text());
    println!("lineage: {}", lineage.join(" <- "));
    println!("{}", r.expected_failure_text());
    if let Some(e) = r.expected_failure {
        let rec = degree_record(&r.ideal, e.degree, WlpOptions::default());
        println!("degree {}: rank {}/{} ({:?})", e.degree, rec.rank, rec.expected_rank, rec.certification);
    }
    for w in &r.witnesses {
        println!("{:?} witness holds: {}", w.kind, w.holds_for(&r.ideal));
    }
}
