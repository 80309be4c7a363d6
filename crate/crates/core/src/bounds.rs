//! Closed-form generator-count bounds.
//!
//! For `n >= 3` variables and generator degree `d >= 2`, `sigma(n, d)` is the
//! set of generator counts `mu` for which some artinian equigenerated monomial
//! ideal fails the WLP; outside it every such ideal has the WLP.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::binomial;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundsError {
    #[error("(n, d) = ({n}, {d}) is outside the range n >= 3, d >= 2")]
    OutOfRange { n: u32, d: u32 },
    #[error("every artinian quadratic monomial algebra in 3 variables has the WLP")]
    WlpForced,
    #[error("the quadratic target set needs n >= 4, got {0}")]
    QuadraticRange(u32),
}

fn check(n: u32, d: u32) -> Result<(), BoundsError> {
    if n < 3 || d < 2 {
        Err(BoundsError::OutOfRange { n, d })
    } else {
        Ok(())
    }
}

/// `dim S_d = C(n+d-1, d)`
pub fn hf_polynomial_ring(n: u32, d: u32) -> u64 {
    binomial((n + d - 1) as u64, d as u64)
}

/// `HF(S,d) - HF(S,d-1) = C(n+d-2, d)`
pub fn delta(n: u32, d: u32) -> u64 {
    assert!(n >= 1 && d >= 1, "delta needs n, d >= 1");
    binomial((n + d - 2) as u64, d as u64)
}

pub fn alpha(n: u32, d: u32) -> Result<u64, BoundsError> {
    check(n, d)?;
    let n64 = n as u64;
    Ok(match (n, d) {
        (3, d) if d % 6 == 3 => 4,
        (3, _) => 5,
        (n, 2) if n % 2 == 0 => n64 + 2,
        (5, 2) => 9,
        (_, 2) => n64 + 3,
        (4, 3) => 6,
        _ => n64 + 1,
    })
}

pub fn beta(n: u32, d: u32) -> Result<u64, BoundsError> {
    check(n, d)?;
    let d64 = d as u64;
    let correction = match n {
        3 if d % 2 == 1 => 3 * (d64 - 1),
        3 => 3 * (d64 - 1) + 1,
        _ => 2 * d64,
    };
    Ok(hf_polynomial_ring(n, d) - correction)
}

/// Generator count of the smallest injectivity-failing construction.
pub fn nu(n: u32, d: u32) -> Result<u64, BoundsError> {
    check(n, d)?;
    match (n, d) {
        (3, 2) => Err(BoundsError::WlpForced),
        (3, 3) => Ok(4),
        (4, 2) => Ok(6),
        _ => Ok(2 * n as u64 - 1),
    }
}

pub fn sigma(n: u32, d: u32) -> Result<IntervalSet, BoundsError> {
    let (lo, hi) = (alpha(n, d)?, beta(n, d)?);
    let mut set = IntervalSet::new(lo, hi);
    if (n, d) == (6, 2) {
        set.exclude(10);
    }
    Ok(set)
}

/// Generator counts reached by the quadratic constructions.
pub fn omega(n: u32) -> Result<IntervalSet, BoundsError> {
    if n < 4 {
        return Err(BoundsError::QuadraticRange(n));
    }
    let top = delta(n, 2);
    let n64 = n as u64;
    Ok(match n {
        4 => IntervalSet::new(6, top),
        5 => IntervalSet::new(9, top),
        6 => {
            let mut s = IntervalSet::new(8, top);
            s.exclude(10);
            s
        }
        n if n % 2 == 1 => IntervalSet::new(n64 + 3, top),
        _ => IntervalSet::new(n64 + 2, top),
    })
}

/// Integer interval `[lo, hi]` minus finitely many exceptions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalSet {
    pub lo: u64,
    pub hi: u64,
    pub excluded: BTreeSet<u64>,
}

impl IntervalSet {
    pub fn new(lo: u64, hi: u64) -> Self {
        Self {
            lo,
            hi,
            excluded: BTreeSet::new(),
        }
    }

    pub fn exclude(&mut self, v: u64) {
        if (self.lo..=self.hi).contains(&v) {
            self.excluded.insert(v);
        }
    }

    pub fn contains(&self, v: u64) -> bool {
        (self.lo..=self.hi).contains(&v) && !self.excluded.contains(&v)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn len(&self) -> u64 {
        if self.lo > self.hi {
            0
        } else {
            self.hi - self.lo + 1 - self.excluded.len() as u64
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        (self.lo..=self.hi).filter(move |v| !self.excluded.contains(v))
    }

    pub fn min(&self) -> Option<u64> {
        self.iter().next()
    }

    pub fn max(&self) -> Option<u64> {
        (self.lo..=self.hi).rev().find(|v| !self.excluded.contains(v)).filter(|_| !self.is_empty())
    }

    /// Maximal runs of consecutive members.
    pub fn runs(&self) -> Vec<(u64, u64)> {
        let mut runs = Vec::new();
        if self.is_empty() {
            return runs;
        }
        let mut start = self.lo;
        for &x in self.excluded.iter().chain(std::iter::once(&(self.hi + 1))) {
            if x > start {
                runs.push((start, x - 1));
            }
            start = x + 1;
        }
        runs
    }
}

impl fmt::Display for IntervalSet {
    /// Runs of three or more are written `a..b`: `{8,9,11..17}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .runs()
            .into_iter()
            .flat_map(|(a, b)| {
                if b - a >= 2 {
                    vec![format!("{a}..{b}")]
                } else {
                    (a..=b).map(|v| v.to_string()).collect()
                }
            })
            .collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}
