//! Rank of a multiplication matrix under both policies.

use wlp_core::linalg::{rank, RankPolicy};
use wlp_core::monomial::MonomialIdeal;
use wlp_core::wlp::mult_map_matrix;

fn main() {
    let ideal = MonomialIdeal::parse("x1^6,x2^6,x3^6,x4^6,x5^6,x1^3*x2^3").unwrap();
    let m = mult_map_matrix(&ideal, 11);
    println!("{} x {} with {} nonzeros", m.rows(), m.cols(), m.nnz());
    for policy in [RankPolicy::Fast, RankPolicy::Certified] {
        let r = rank(&m, policy, 1);
        println!("{policy:?}: rank {} ({:?}, primes {:?})", r.rank, r.certification, r.primes);
    }
}
