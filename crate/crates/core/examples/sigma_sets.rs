//! Generator counts admitting a WLP failure, for a few (n, d).

use wlp_core::bounds::{alpha, beta, sigma};

fn main() {
    for (n, d) in [(3, 2), (3, 3), (3, 4), (4, 2), (5, 2), (6, 2), (8, 4)] {
        let s = sigma(n, d).unwrap();
        println!("n={n} d={d}: alpha={} beta={} Sigma={s}", alpha(n, d).unwrap(), beta(n, d).unwrap());
    }
}
