use num_rational::BigRational;
use num_traits::{One, Zero};

use super::SparseIntMatrix;

/// Basis of the right kernel `{v : M v = 0}` over the rationals.
///
/// Computed from the reduced row echelon form; the basis vector attached to a
/// free column has a 1 there and 0 in every other free column.
pub fn nullspace(m: &SparseIntMatrix) -> Vec<Vec<BigRational>> {
    let cols = m.cols();
    let mut a: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); cols]; m.rows()];
    for &(r, c, v) in m.entries() {
        a[r][c] = BigRational::from_integer(v.into());
    }
    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..a.len()).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let inv = a[rank][c].recip();
        for v in a[rank].iter_mut().skip(c) {
            if !v.is_zero() {
                *v *= &inv;
            }
        }
        let pivot_row = a[rank].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == rank || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for k in c..cols {
                if !pivot_row[k].is_zero() {
                    let t = &f * &pivot_row[k];
                    row[k] -= t;
                }
            }
        }
        pivots.push(c);
        rank += 1;
        if rank == a.len() {
            break;
        }
    }
    let mut is_pivot = vec![false; cols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![BigRational::zero(); cols];
            v[f] = BigRational::one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = -a[r][f].clone();
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn apply(m: &SparseIntMatrix, v: &[BigRational]) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); m.rows()];
        for &(r, c, x) in m.entries() {
            out[r] += BigRational::from_integer(x.into()) * &v[c];
        }
        out
    }

    #[test]
    fn kernel_vectors_are_annihilated_and_counted() {
        let m = SparseIntMatrix::from_dense(&[vec![1, 1, 0, 0], vec![0, 1, 1, 0], vec![1, 2, 1, 0]]);
        let ker = nullspace(&m);
        assert_eq!(ker.len(), 4 - super::super::rank_exact(&m));
        for v in &ker {
            assert!(apply(&m, v).iter().all(Zero::is_zero));
        }
        assert_eq!(nullspace(&SparseIntMatrix::identity(3)).len(), 0);
        assert_eq!(nullspace(&SparseIntMatrix::zeros(2, 3)).len(), 3);
    }
}
