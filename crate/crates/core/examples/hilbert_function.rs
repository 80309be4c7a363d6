//! Hilbert function of a monomial quotient.

use wlp_core::hilbert::hilbert_table;
use wlp_core::monomial::MonomialIdeal;

fn main() {
    let ideal = MonomialIdeal::parse("x1^5,x2^5,x3^5,x1^3*x2*x3,x1^3*x2^2,x1^4*x2,x1^4*x3").unwrap();
    let table = hilbert_table(&ideal).unwrap();
    println!("{}", ideal.to_text());
    println!("{}", table.series_string());
    println!("socle degree {:?}, total dimension {}", table.socle_degree(), table.total());
}
