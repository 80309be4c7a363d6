//! Hilbert functions of monomial quotients.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::monomial::{quotient_basis, MonomialQuotient};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HilbertError {
    #[error("S/I is not artinian for I = ({0}); its Hilbert function never vanishes")]
    NotArtinian(String),
}

/// `HF(S/I, 0), ..., HF(S/I, D)` with `D` the socle degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertTable {
    pub values: Vec<u64>,
}

impl HilbertTable {
    /// Trailing zeros are dropped so the last entry sits in the socle degree.
    pub fn new(mut values: Vec<u64>) -> Self {
        while values.last() == Some(&0) {
            values.pop();
        }
        Self { values }
    }

    /// `HF(i)`, zero outside the table (including negative degrees).
    pub fn get(&self, i: i64) -> u64 {
        if i < 0 {
            0
        } else {
            self.values.get(i as usize).copied().unwrap_or(0)
        }
    }

    pub fn socle_degree(&self) -> Option<u32> {
        self.values.len().checked_sub(1).map(|d| d as u32)
    }

    /// Total dimension of the algebra.
    pub fn total(&self) -> u64 {
        self.values.iter().sum()
    }

    /// Table of a tensor product of algebras.
    pub fn convolve(&self, other: &HilbertTable) -> HilbertTable {
        convolve(self, other)
    }

    pub fn series_string(&self) -> String {
        series_string(&self.values)
    }
}

/// `dim (S/I)_i`
pub fn hilbert_function<Q: MonomialQuotient + ?Sized>(ideal: &Q, i: u32) -> u64 {
    quotient_basis(ideal, i).len() as u64
}

/// Full table of an artinian quotient.
pub fn hilbert_table<Q: MonomialQuotient + ?Sized>(ideal: &Q) -> Result<HilbertTable, HilbertError> {
    let bound = ideal.socle_bound().ok_or_else(|| HilbertError::NotArtinian(ideal.describe()))?;
    let values: Vec<u64> = (0..=bound).into_par_iter().map(|i| hilbert_function(ideal, i)).collect();
    Ok(HilbertTable::new(values))
}

pub fn convolve(a: &HilbertTable, b: &HilbertTable) -> HilbertTable {
    if a.values.is_empty() || b.values.is_empty() {
        return HilbertTable::new(Vec::new());
    }
    let mut out = vec![0u64; a.values.len() + b.values.len() - 1];
    for (i, x) in a.values.iter().enumerate() {
        for (j, y) in b.values.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    HilbertTable::new(out)
}

/// `1+3T+6T^2+...`; unit coefficients are omitted, zero terms skipped.
pub fn series_string(values: &[u64]) -> String {
    let mut out = String::new();
    for (i, &v) in values.iter().enumerate() {
        if v == 0 {
            continue;
        }
        if !out.is_empty() {
            out.push('+');
        }
        match (i, v) {
            (0, v) => write!(out, "{v}").unwrap(),
            (1, 1) => out.push('T'),
            (1, v) => write!(out, "{v}T").unwrap(),
            (i, 1) => write!(out, "T^{i}").unwrap(),
            (i, v) => write!(out, "{v}T^{i}").unwrap(),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn hilbert_series_string<Q: MonomialQuotient + ?Sized>(ideal: &Q) -> Result<String, HilbertError> {
    Ok(hilbert_table(ideal)?.series_string())
}

/// Degrees `i` with `HF(i-1) < HF(i) > HF(i+1)`, reading `HF(-1) = 0`.
pub fn isolated_peaks(table: &HilbertTable) -> Vec<u32> {
    (0..table.values.len() as i64)
        .filter(|&i| table.get(i - 1) < table.get(i) && table.get(i) > table.get(i + 1))
        .map(|i| i as u32)
        .collect()
}
