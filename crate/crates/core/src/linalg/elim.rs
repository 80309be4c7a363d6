//! Sparse Gaussian elimination with Markowitz-style pivoting, generic over the
//! coefficient domain, switching to a dense kernel once the active submatrix
//! fills past [`DENSE_FILL_THRESHOLD`].

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::modp::PrimeField;

pub const DENSE_FILL_THRESHOLD: f64 = 0.30;

pub(crate) type SparseRow<S> = Vec<(u32, S)>;

/// Raised by fixed-width integer arithmetic; the caller reruns in `BigInt`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Overflow;

pub(crate) trait EliminationDomain {
    type S: Clone;

    fn zero(&self) -> Self::S;

    /// Eliminate column `col` from `target` using `pivot`; both contain `col`.
    fn reduce(&self, target: &[(u32, Self::S)], pivot: &[(u32, Self::S)], col: u32) -> Result<SparseRow<Self::S>, Overflow>;

    fn dense_rank(&self, rows: Vec<Vec<Self::S>>, ncols: usize) -> Result<usize, Overflow>;
}

fn entry<S>(row: &[(u32, S)], col: u32) -> &S {
    let k = row.binary_search_by_key(&col, |e| e.0).expect("column present in row");
    &row[k].1
}

/// Merge `a*target - b*pivot`, dropping zeros. `combine(x, y)` receives the
/// target and pivot entries (either may be absent).
fn merge<S: Clone>(
    target: &[(u32, S)],
    pivot: &[(u32, S)],
    mut combine: impl FnMut(Option<&S>, Option<&S>) -> Result<Option<S>, Overflow>,
) -> Result<SparseRow<S>, Overflow> {
    let mut out = Vec::with_capacity(target.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < target.len() || j < pivot.len() {
        let (col, v) = match (target.get(i), pivot.get(j)) {
            (Some(t), Some(p)) if t.0 == p.0 => {
                i += 1;
                j += 1;
                (t.0, combine(Some(&t.1), Some(&p.1))?)
            }
            (Some(t), Some(p)) if t.0 < p.0 => {
                i += 1;
                (t.0, combine(Some(&t.1), None)?)
            }
            (Some(t), None) => {
                i += 1;
                (t.0, combine(Some(&t.1), None)?)
            }
            (_, Some(p)) => {
                j += 1;
                (p.0, combine(None, Some(&p.1))?)
            }
            (None, None) => unreachable!(),
        };
        if let Some(v) = v {
            out.push((col, v));
        }
    }
    Ok(out)
}

impl EliminationDomain for PrimeField {
    type S = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn reduce(&self, target: &[(u32, u64)], pivot: &[(u32, u64)], col: u32) -> Result<SparseRow<u64>, Overflow> {
        let factor = self.mul(*entry(target, col), self.inv(*entry(pivot, col)));
        merge(target, pivot, |t, p| {
            let v = match (t, p) {
                (Some(&t), Some(&p)) => self.sub(t, self.mul(factor, p)),
                (Some(&t), None) => t,
                (None, Some(&p)) => self.neg(self.mul(factor, p)),
                (None, None) => 0,
            };
            Ok((v != 0).then_some(v))
        })
    }

    fn dense_rank(&self, mut rows: Vec<Vec<u64>>, ncols: usize) -> Result<usize, Overflow> {
        let mut rank = 0;
        for c in 0..ncols {
            let Some(pr) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
                continue;
            };
            rows.swap(rank, pr);
            let inv = self.inv(rows[rank][c]);
            let (head, tail) = rows.split_at_mut(rank + 1);
            let pivot = &head[rank];
            for row in tail.iter_mut() {
                let t = row[c];
                if t == 0 {
                    continue;
                }
                let f = self.mul(t, inv);
                for k in c..ncols {
                    let pk = pivot[k];
                    if pk != 0 {
                        row[k] = self.sub(row[k], self.mul(f, pk));
                    }
                }
            }
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        Ok(rank)
    }
}

/// Integer types usable for fraction-free elimination.
pub(crate) trait ExactInt: Clone + PartialEq {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn mul(&self, other: &Self) -> Result<Self, Overflow>;
    fn sub(&self, other: &Self) -> Result<Self, Overflow>;
    fn gcd(&self, other: &Self) -> Self;
    fn div_exact(&self, other: &Self) -> Self;
    fn is_unit(&self) -> bool;
}

impl ExactInt for i64 {
    fn zero() -> Self {
        0
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn mul(&self, other: &Self) -> Result<Self, Overflow> {
        self.checked_mul(*other).filter(|&v| v != i64::MIN).ok_or(Overflow)
    }
    fn sub(&self, other: &Self) -> Result<Self, Overflow> {
        self.checked_sub(*other).filter(|&v| v != i64::MIN).ok_or(Overflow)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, other: &Self) -> Self {
        self / other
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
}

impl ExactInt for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Result<Self, Overflow> {
        Ok(self * other)
    }
    fn sub(&self, other: &Self) -> Result<Self, Overflow> {
        Ok(self - other)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, other: &Self) -> Self {
        self / other
    }
    fn is_unit(&self) -> bool {
        self.abs() == BigInt::from(1)
    }
}

/// Fraction-free elimination over the integers: rows are combined as
/// `p*target - t*pivot` and divided by their content afterwards.
pub(crate) struct Integers<T>(std::marker::PhantomData<T>);

impl<T> Integers<T> {
    pub(crate) fn new() -> Self {
        Self(std::marker::PhantomData)
    }
}

fn remove_content<T: ExactInt>(row: &mut [(u32, T)]) {
    let mut g = T::zero();
    for (_, v) in row.iter() {
        g = g.gcd(v);
        if g.is_unit() {
            return;
        }
    }
    if !g.is_zero() {
        for (_, v) in row.iter_mut() {
            *v = v.div_exact(&g);
        }
    }
}

impl<T: ExactInt> EliminationDomain for Integers<T> {
    type S = T;

    fn zero(&self) -> T {
        T::zero()
    }

    fn reduce(&self, target: &[(u32, T)], pivot: &[(u32, T)], col: u32) -> Result<SparseRow<T>, Overflow> {
        let t = entry(target, col);
        let p = entry(pivot, col);
        let g = t.gcd(p);
        let a = p.div_exact(&g);
        let b = t.div_exact(&g);
        let mut out = merge(target, pivot, |x, y| {
            let v = match (x, y) {
                (Some(x), Some(y)) => a.mul(x)?.sub(&b.mul(y)?)?,
                (Some(x), None) => a.mul(x)?,
                (None, Some(y)) => T::zero().sub(&b.mul(y)?)?,
                (None, None) => T::zero(),
            };
            Ok((!v.is_zero()).then_some(v))
        })?;
        remove_content(&mut out);
        Ok(out)
    }

    fn dense_rank(&self, mut rows: Vec<Vec<T>>, ncols: usize) -> Result<usize, Overflow> {
        // Bareiss: every division below is exact
        let mut rank = 0;
        let mut prev = None::<T>;
        for c in 0..ncols {
            let Some(pr) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
                continue;
            };
            rows.swap(rank, pr);
            let (head, tail) = rows.split_at_mut(rank + 1);
            let pivot = &head[rank];
            let pv = pivot[c].clone();
            for row in tail.iter_mut() {
                let t = row[c].clone();
                for k in c..ncols {
                    let mut v = pv.mul(&row[k])?.sub(&t.mul(&pivot[k])?)?;
                    if let Some(d) = &prev {
                        v = v.div_exact(d);
                    }
                    row[k] = v;
                }
                for v in row[..c].iter_mut() {
                    *v = T::zero();
                }
            }
            prev = Some(pv);
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        Ok(rank)
    }
}

/// Rank of the matrix whose rows are given as sorted sparse vectors.
pub(crate) fn sparse_rank<D: EliminationDomain>(domain: &D, ncols: usize, input: Vec<SparseRow<D::S>>) -> Result<usize, Overflow> {
    let mut rows: Vec<Option<SparseRow<D::S>>> = input.into_iter().map(|r| (!r.is_empty()).then_some(r)).collect();
    let mut col_rows: Vec<Vec<u32>> = vec![Vec::new(); ncols];
    let mut col_count = vec![0u32; ncols];
    let mut active_rows = 0usize;
    let mut nnz = 0usize;
    for (r, row) in rows.iter().enumerate() {
        if let Some(row) = row {
            active_rows += 1;
            nnz += row.len();
            for &(c, _) in row {
                col_rows[c as usize].push(r as u32);
                col_count[c as usize] += 1;
            }
        }
    }
    let mut active_cols = col_count.iter().filter(|&&k| k > 0).count();
    let mut heap: BinaryHeap<Reverse<(u32, u32)>> = col_count
        .iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(c, &k)| Reverse((k, c as u32)))
        .collect();

    let mut rank = 0;
    loop {
        if active_rows == 0 || active_cols == 0 {
            return Ok(rank);
        }
        if nnz as f64 > DENSE_FILL_THRESHOLD * (active_rows as f64) * (active_cols as f64) {
            let mut col_index = vec![u32::MAX; ncols];
            let mut next = 0u32;
            for (c, &k) in col_count.iter().enumerate() {
                if k > 0 {
                    col_index[c] = next;
                    next += 1;
                }
            }
            let width = next as usize;
            let dense: Vec<Vec<D::S>> = rows
                .iter()
                .flatten()
                .map(|row| {
                    let mut d = vec![domain.zero(); width];
                    for (c, v) in row {
                        d[col_index[*c as usize] as usize] = v.clone();
                    }
                    d
                })
                .collect();
            return Ok(rank + domain.dense_rank(dense, width)?);
        }

        let Some(Reverse((k, c))) = heap.pop() else {
            return Ok(rank);
        };
        if k == 0 || col_count[c as usize] != k {
            continue;
        }
        let c = c as usize;
        let mut members: Vec<u32> = std::mem::take(&mut col_rows[c]);
        members.sort_unstable();
        members.dedup();
        members.retain(|&r| rows[r as usize].as_ref().is_some_and(|row| row.binary_search_by_key(&(c as u32), |e| e.0).is_ok()));
        debug_assert_eq!(members.len(), k as usize);
        let &pivot_r = members
            .iter()
            .min_by_key(|&&r| (rows[r as usize].as_ref().map_or(usize::MAX, Vec::len), r))
            .expect("column count positive");
        let pivot = rows[pivot_r as usize].take().expect("live pivot row");
        active_rows -= 1;
        nnz -= pivot.len();
        rank += 1;
        for &(pc, _) in &pivot {
            let pc = pc as usize;
            col_count[pc] -= 1;
            if col_count[pc] == 0 {
                active_cols -= 1;
            }
            heap.push(Reverse((col_count[pc], pc as u32)));
        }

        for &r in members.iter().filter(|&&r| r != pivot_r) {
            let old = rows[r as usize].take().expect("live row");
            let new = domain.reduce(&old, &pivot, c as u32)?;
            nnz = nnz + new.len() - old.len();
            diff_columns(&old, &new, |col, added| {
                let col = col as usize;
                if added {
                    col_rows[col].push(r);
                    if col_count[col] == 0 {
                        active_cols += 1;
                    }
                    col_count[col] += 1;
                } else {
                    col_count[col] -= 1;
                    if col_count[col] == 0 {
                        active_cols -= 1;
                    }
                }
                heap.push(Reverse((col_count[col], col as u32)));
            });
            if new.is_empty() {
                active_rows -= 1;
            } else {
                rows[r as usize] = Some(new);
            }
        }
    }
}

fn diff_columns<S>(old: &[(u32, S)], new: &[(u32, S)], mut f: impl FnMut(u32, bool)) {
    let (mut i, mut j) = (0, 0);
    while i < old.len() || j < new.len() {
        match (old.get(i), new.get(j)) {
            (Some(a), Some(b)) if a.0 == b.0 => {
                i += 1;
                j += 1;
            }
            (Some(a), Some(b)) if a.0 < b.0 => {
                f(a.0, false);
                i += 1;
            }
            (Some(a), None) => {
                f(a.0, false);
                i += 1;
            }
            (_, Some(b)) => {
                f(b.0, true);
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
}
