//! Enumerate ideals up to relabeling and check every orbit.

use wlp_core::verify::{enumerate_orbits, verify_sharpness};
use wlp_core::wlp::WlpOptions;

fn main() {
    let orbits = enumerate_orbits(6, 2, 10, 1000).unwrap();
    println!("(6,2) mu=10: {} generator sets, {} orbits", orbits.raw_count, orbits.representatives.len());
    for (ideal, size) in orbits.representatives.iter().zip(&orbits.orbit_sizes) {
        println!("  {size:>3}  {}", ideal.to_text());
    }
    let r = verify_sharpness(6, 2, 10, 1000, WlpOptions::certified()).unwrap();
    println!("{:?}", r.outcome);
}
