//! Hypotheses of the gluing criterion, with I = K + (x_j) and J = K : x_j.

use wlp_core::monomial::{GeneralMonomialIdeal, MonomialIdeal};
use wlp_core::verify::glue_condition_check;
use wlp_core::wlp::WlpOptions;

fn main() {
    let k = MonomialIdeal::parse("x1^2,x2^2,x3^2,x4^2,x5^2,x6^2,x7^2,x1*x2,x1*x3").unwrap();
    let g = glue_condition_check(&GeneralMonomialIdeal::from(&k), 0, WlpOptions::certified()).unwrap();
    println!("K + (x1) = ({})  {}", g.plus_var, g.plus_hilbert.series_string());
    println!("K : x1   = ({})  {}", g.colon_var, g.colon_hilbert.series_string());
    println!("hypotheses hold: {}, K has the WLP: {}", g.hypotheses_hold, g.k_has_wlp);
}
