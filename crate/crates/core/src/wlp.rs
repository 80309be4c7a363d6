//! Multiplication by `l = x1 + ... + xn` on a monomial quotient and the
//! resulting WLP decision.
//!
//! For monomial ideals the sum of the variables is a Lefschetz element as soon
//! as any linear form is, so every map here is a 0/1 matrix.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hilbert::{hilbert_table, HilbertError, HilbertTable};
use crate::linalg::{rank, Certification, RankPolicy, SparseIntMatrix};
use crate::monomial::{quotient_basis, Monomial, MonomialQuotient};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WlpError {
    #[error(transparent)]
    Hilbert(#[from] HilbertError),
    #[error("degree {0} map has maximal rank; there is no failure to classify")]
    MaximalRecord(u32),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FailureMode {
    /// `HF(i) < HF(i+1)` and the map is not injective.
    Injectivity,
    /// `HF(i) > HF(i+1)` and the map is not surjective.
    Surjectivity,
    /// `HF(i) = HF(i+1)`; injectivity and surjectivity coincide.
    BothSidesEqual,
}

impl FailureMode {
    /// Whether an observed mode is compatible with a predicted one. An
    /// equal-dimension failure is a failure of both kinds.
    pub fn consistent_with(self, predicted: FailureMode) -> bool {
        self == predicted || self == FailureMode::BothSidesEqual
    }

    pub fn short_name(self) -> &'static str {
        match self {
            FailureMode::Injectivity => "injectivity",
            FailureMode::Surjectivity => "surjectivity",
            FailureMode::BothSidesEqual => "both-sided",
        }
    }
}

impl std::fmt::Display for FailureMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.short_name())
    }
}

/// Rank data of `x l : A_i -> A_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeMapRecord {
    pub degree: u32,
    pub dim_source: u64,
    pub dim_target: u64,
    pub rank: u64,
    pub expected_rank: u64,
    pub maximal: bool,
    pub certification: Certification,
    pub policy: RankPolicy,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Verdict {
    HasWlp,
    Fails { degree: u32, mode: FailureMode },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WlpReport {
    pub ideal: String,
    pub hilbert: HilbertTable,
    pub records: Vec<DegreeMapRecord>,
    pub verdict: Verdict,
    pub failing_degrees: Vec<u32>,
}

impl WlpReport {
    pub fn has_wlp(&self) -> bool {
        self.verdict == Verdict::HasWlp
    }

    pub fn record(&self, degree: u32) -> Option<&DegreeMapRecord> {
        self.records.get(degree as usize)
    }

    pub fn fails_at(&self, degree: u32) -> bool {
        self.failing_degrees.contains(&degree)
    }

    /// Every rank was computed exactly.
    pub fn fully_certified(&self) -> bool {
        self.records.iter().all(|r| r.certification == Certification::Exact)
    }

    /// One-line summary, e.g. `FAILS at degree 2 (rank 5/6, both-sided)`.
    pub fn verdict_line(&self) -> String {
        match &self.verdict {
            Verdict::HasWlp => "HAS WLP".to_string(),
            Verdict::Fails { degree, mode } => {
                let r = &self.records[*degree as usize];
                format!("FAILS at degree {degree} (rank {}/{}, {mode})", r.rank, r.expected_rank)
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct WlpOptions {
    /// `None` picks per matrix via [`RankPolicy::default_for`].
    pub policy: Option<RankPolicy>,
    pub seed: u64,
}

impl WlpOptions {
    pub fn certified() -> Self {
        Self {
            policy: Some(RankPolicy::Certified),
            seed: 0,
        }
    }

    pub fn fast(seed: u64) -> Self {
        Self {
            policy: Some(RankPolicy::Fast),
            seed,
        }
    }
}

/// Matrix of `x l` from the degree-`i` standard monomials (columns) to the
/// degree-`i+1` standard monomials (rows), both in canonical order.
pub fn mult_map_matrix<Q: MonomialQuotient + ?Sized>(ideal: &Q, i: u32) -> SparseIntMatrix {
    let source = quotient_basis(ideal, i);
    let target = quotient_basis(ideal, i + 1);
    map_between(&source.monomials, &target.monomials)
}

fn map_between(source: &[Monomial], target: &[Monomial]) -> SparseIntMatrix {
    let index: HashMap<&Monomial, usize> = target.iter().enumerate().map(|(k, m)| (m, k)).collect();
    let mut entries = Vec::new();
    for (c, m) in source.iter().enumerate() {
        for j in 0..m.nvars() {
            if let Some(&r) = index.get(&m.mul_var(j)) {
                entries.push((r, c, 1));
            }
        }
    }
    SparseIntMatrix::new(target.len(), source.len(), entries).expect("distinct products of distinct monomials")
}

fn degree_seed(seed: u64, degree: u32) -> u64 {
    seed ^ (degree as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

fn record_from_bases(source: &[Monomial], target: &[Monomial], degree: u32, opts: WlpOptions) -> DegreeMapRecord {
    let m = map_between(source, target);
    let expected = source.len().min(target.len()) as u64;
    let policy = opts.policy.unwrap_or_else(|| RankPolicy::default_for(m.rows(), m.cols()));
    let outcome = if expected == 0 {
        crate::linalg::RankOutcome {
            rank: 0,
            certification: Certification::Exact,
            primes: Vec::new(),
            disagreements: 0,
        }
    } else {
        rank(&m, policy, degree_seed(opts.seed, degree))
    };
    DegreeMapRecord {
        degree,
        dim_source: source.len() as u64,
        dim_target: target.len() as u64,
        rank: outcome.rank as u64,
        expected_rank: expected,
        maximal: outcome.rank as u64 == expected,
        certification: outcome.certification,
        policy,
    }
}

/// Rank record of one degree, without scanning the others.
pub fn degree_record<Q: MonomialQuotient + ?Sized>(ideal: &Q, i: u32, opts: WlpOptions) -> DegreeMapRecord {
    let source = quotient_basis(ideal, i);
    let target = quotient_basis(ideal, i + 1);
    record_from_bases(&source.monomials, &target.monomials, i, opts)
}

pub fn classify_failure(record: &DegreeMapRecord) -> Result<FailureMode, WlpError> {
    if record.maximal {
        return Err(WlpError::MaximalRecord(record.degree));
    }
    Ok(mode_for(record.dim_source, record.dim_target))
}

fn mode_for(source: u64, target: u64) -> FailureMode {
    match source.cmp(&target) {
        std::cmp::Ordering::Less => FailureMode::Injectivity,
        std::cmp::Ordering::Greater => FailureMode::Surjectivity,
        std::cmp::Ordering::Equal => FailureMode::BothSidesEqual,
    }
}

/// Scan every degree from 0 to the socle degree.
pub fn wlp_report<Q: MonomialQuotient + ?Sized>(ideal: &Q, opts: WlpOptions) -> Result<WlpReport, WlpError> {
    let hilbert = hilbert_table(ideal)?;
    let top = hilbert.values.len() as u32;
    let bases: Vec<Vec<Monomial>> = (0..=top).into_par_iter().map(|i| quotient_basis(ideal, i).monomials).collect();
    let records: Vec<DegreeMapRecord> = (0..top)
        .into_par_iter()
        .map(|i| record_from_bases(&bases[i as usize], &bases[i as usize + 1], i, opts))
        .collect();
    let failing_degrees: Vec<u32> = records.iter().filter(|r| !r.maximal).map(|r| r.degree).collect();
    let verdict = match failing_degrees.first() {
        None => Verdict::HasWlp,
        Some(&degree) => {
            let r = &records[degree as usize];
            Verdict::Fails {
                degree,
                mode: mode_for(r.dim_source, r.dim_target),
            }
        }
    };
    Ok(WlpReport {
        ideal: ideal.describe(),
        hilbert,
        records,
        verdict,
        failing_degrees,
    })
}

/// Hilbert function of `S/(I + (l))`: degree 0 contributes 1 and degree
/// `i+1` the cokernel dimension `HF(i+1) - rank(x l on degree i)`.
pub fn lefschetz_quotient_series(report: &WlpReport) -> HilbertTable {
    let mut values = vec![report.hilbert.get(0)];
    values.extend(report.records.iter().map(|r| r.dim_target - r.rank));
    HilbertTable::new(values)
}
