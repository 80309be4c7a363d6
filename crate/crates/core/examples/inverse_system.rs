//! Dual polynomials killed by I and l, and a hand-written member.

use wlp_core::inverse::{in_inverse_system, inverse_kernel_basis, Polynomial};
use wlp_core::monomial::MonomialIdeal;

fn main() {
    let ideal = MonomialIdeal::parse("x1^3,x2^3,x3^3,x1*x2*x3").unwrap();
    for i in 0..=4 {
        let basis = inverse_kernel_basis(&ideal, i);
        println!("degree {i}: {} kernel elements", basis.len());
        for f in basis {
            println!("  {f}");
        }
    }
    let v = Polynomial::parse(3, "(X1-X2)(X1-X3)(X2-X3)").unwrap();
    println!("{v} in the inverse system: {}", in_inverse_system(&ideal, &v, true));
}
