//! Check every catalog witness on its grid.

use wlp_core::witness::dual_witness_catalog;

fn main() {
    for entry in dual_witness_catalog() {
        let grid = entry.grid();
        let ok = grid.iter().all(|&(n, d)| entry.build(n, d).unwrap().all_pass());
        println!("{:<18} {:>3} grid points  {}  {}", entry.name, grid.len(), if ok { "ok" } else { "FAILED" }, entry.description);
    }
}
