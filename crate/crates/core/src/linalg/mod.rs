//! Exact rank of sparse integer matrices.
//!
//! Two engines share one sparse elimination core: arithmetic modulo a 31-bit
//! prime, and fraction-free integer elimination that starts in `i64` and
//! restarts in `BigInt` if any intermediate value overflows.

mod elim;
pub mod modp;
mod nullspace;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use elim::{sparse_rank, Integers, SparseRow};
pub use elim::DENSE_FILL_THRESHOLD;
pub use modp::{is_prime, PrimeField};
pub use nullspace::nullspace;

/// Matrices with more rows or columns than this default to [`RankPolicy::Fast`].
pub const FAST_POLICY_THRESHOLD: usize = 400;

/// Fast-path disagreements tolerated before escalating to exact elimination.
pub const MAX_PRIME_DISAGREEMENTS: u32 = 3;

/// Prime used by the certified path's full-rank shortcut.
const CERTIFY_PRIME: u64 = 2_147_483_647;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("entry ({row}, {col}) outside a {rows}x{cols} matrix")]
    OutOfRange { row: usize, col: usize, rows: usize, cols: usize },
    #[error("duplicate entry at ({0}, {1})")]
    Duplicate(usize, usize),
    #[error("explicit zero stored at ({0}, {1})")]
    ExplicitZero(usize, usize),
    #[error("{0} is not a prime below 2^32")]
    NotPrime(u64),
}

/// Sparse integer matrix; entries are kept sorted row-major with no
/// duplicates and no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SparseIntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<(usize, usize, i64)>,
}

impl SparseIntMatrix {
    pub fn new(rows: usize, cols: usize, mut entries: Vec<(usize, usize, i64)>) -> Result<Self, LinalgError> {
        entries.sort_unstable_by_key(|&(r, c, _)| (r, c));
        for (k, &(r, c, v)) in entries.iter().enumerate() {
            if r >= rows || c >= cols {
                return Err(LinalgError::OutOfRange { row: r, col: c, rows, cols });
            }
            if v == 0 {
                return Err(LinalgError::ExplicitZero(r, c));
            }
            if k > 0 && entries[k - 1].0 == r && entries[k - 1].1 == c {
                return Err(LinalgError::Duplicate(r, c));
            }
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: Vec::new(),
        }
    }

    pub fn identity(k: usize) -> Self {
        Self {
            rows: k,
            cols: k,
            entries: (0..k).map(|i| (i, i, 1)).collect(),
        }
    }

    /// Build from dense rows, dropping zeros.
    pub fn from_dense(dense: &[Vec<i64>]) -> Self {
        let rows = dense.len();
        let cols = dense.first().map_or(0, Vec::len);
        let entries = dense
            .iter()
            .enumerate()
            .flat_map(|(r, row)| {
                assert_eq!(row.len(), cols, "ragged dense matrix");
                row.iter().enumerate().filter(|(_, &v)| v != 0).map(move |(c, &v)| (r, c, v))
            })
            .collect();
        Self { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[(usize, usize, i64)] {
        &self.entries
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut d = vec![vec![0; self.cols]; self.rows];
        for &(r, c, v) in &self.entries {
            d[r][c] = v;
        }
        d
    }

    pub fn transpose(&self) -> Self {
        let mut entries: Vec<_> = self.entries.iter().map(|&(r, c, v)| (c, r, v)).collect();
        entries.sort_unstable_by_key(|&(r, c, _)| (r, c));
        Self {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    /// Row `r` moves to `row_perm[r]`, column `c` to `col_perm[c]`.
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> Self {
        assert_eq!(row_perm.len(), self.rows);
        assert_eq!(col_perm.len(), self.cols);
        let mut entries: Vec<_> = self.entries.iter().map(|&(r, c, v)| (row_perm[r], col_perm[c], v)).collect();
        entries.sort_unstable_by_key(|&(r, c, _)| (r, c));
        Self {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    /// Rows as sorted sparse vectors, mapped through `f`.
    fn sparse_rows<S>(&self, mut f: impl FnMut(i64) -> Option<S>) -> Vec<SparseRow<S>> {
        let mut out: Vec<SparseRow<S>> = (0..self.rows).map(|_| Vec::new()).collect();
        for &(r, c, v) in &self.entries {
            if let Some(s) = f(v) {
                out[r].push((c as u32, s));
            }
        }
        out
    }

    /// The orientation with fewer rows eliminates faster; rank is unchanged.
    fn oriented(&self) -> std::borrow::Cow<'_, Self> {
        if self.rows > self.cols {
            std::borrow::Cow::Owned(self.transpose())
        } else {
            std::borrow::Cow::Borrowed(self)
        }
    }
}

/// Rank of `m` reduced modulo the prime `p < 2^32`.
pub fn rank_modular(m: &SparseIntMatrix, p: u64) -> Result<usize, LinalgError> {
    if p >= 1 << 32 || !is_prime(p) {
        return Err(LinalgError::NotPrime(p));
    }
    let field = PrimeField::new_unchecked(p);
    let m = m.oriented();
    let rows = m.sparse_rows(|v| Some(field.reduce_i64(v)).filter(|&x| x != 0));
    Ok(sparse_rank(&field, m.cols, rows).expect("field arithmetic cannot overflow"))
}

/// Rank over the rationals by fraction-free elimination.
pub fn rank_exact(m: &SparseIntMatrix) -> usize {
    let m = m.oriented();
    let rows = m.sparse_rows(Some);
    match sparse_rank(&Integers::<i64>::new(), m.cols, rows) {
        Ok(r) => r,
        Err(_) => {
            let rows = m.sparse_rows(|v| Some(num_bigint::BigInt::from(v)));
            sparse_rank(&Integers::<num_bigint::BigInt>::new(), m.cols, rows).expect("BigInt arithmetic cannot overflow")
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RankPolicy {
    /// Rank at two distinct random 31-bit primes, accepted when they agree.
    Fast,
    /// Exact rank over the rationals.
    Certified,
}

impl RankPolicy {
    /// Fast when either dimension exceeds [`FAST_POLICY_THRESHOLD`].
    pub fn default_for(rows: usize, cols: usize) -> Self {
        if rows.max(cols) > FAST_POLICY_THRESHOLD {
            Self::Fast
        } else {
            Self::Certified
        }
    }
}

impl std::str::FromStr for RankPolicy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "fast" => Ok(Self::Fast),
            "certified" => Ok(Self::Certified),
            other => Err(format!("unknown rank policy {other:?} (expected fast or certified)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Certification {
    Exact,
    Probabilistic,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankOutcome {
    pub rank: usize,
    pub certification: Certification,
    /// Primes used by the fast path, in the order tried.
    pub primes: Vec<u64>,
    /// Number of fast-path attempts whose two primes disagreed.
    pub disagreements: u32,
}

/// A uniformly chosen prime in `[2^30, 2^31)`.
pub fn random_prime<R: Rng>(rng: &mut R) -> u64 {
    loop {
        let candidate = rng.gen_range((1u64 << 30)..(1u64 << 31)) | 1;
        if is_prime(candidate) {
            return candidate;
        }
    }
}

/// Rank under `policy`. The fast path is deterministic given `seed`.
pub fn rank(m: &SparseIntMatrix, policy: RankPolicy, seed: u64) -> RankOutcome {
    match policy {
        RankPolicy::Certified => certified(m, Vec::new(), 0),
        RankPolicy::Fast => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut primes = Vec::new();
            let mut disagreements = 0;
            while disagreements < MAX_PRIME_DISAGREEMENTS {
                let p = random_prime(&mut rng);
                let q = loop {
                    let q = random_prime(&mut rng);
                    if q != p {
                        break q;
                    }
                };
                primes.extend([p, q]);
                let rp = rank_modular(m, p).expect("random_prime yields primes");
                let rq = rank_modular(m, q).expect("random_prime yields primes");
                if rp == rq {
                    return RankOutcome {
                        rank: rp,
                        certification: Certification::Probabilistic,
                        primes,
                        disagreements,
                    };
                }
                disagreements += 1;
            }
            certified(m, primes, disagreements)
        }
    }
}

fn certified(m: &SparseIntMatrix, primes: Vec<u64>, disagreements: u32) -> RankOutcome {
    // rank mod p never exceeds the rational rank, so a full modular rank is exact
    let full = m.rows.min(m.cols);
    let modular = rank_modular(m, CERTIFY_PRIME).expect("constant is prime");
    let rank = if modular == full { full } else { rank_exact(m) };
    RankOutcome {
        rank,
        certification: Certification::Exact,
        primes,
        disagreements,
    }
}
