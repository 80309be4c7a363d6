//! Campaigns over `(n, d)`: a confirmed failing ideal for every generator
//! count in `Sigma(n,d)`, and exhaustive WLP checks (up to relabeling) for
//! every other count.

use std::collections::HashSet;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::bounds::{self, hf_polynomial_ring, BoundsError};
use crate::constructions::{construct_failing_ideal, ConstructionRecipe, Family};
use crate::hilbert::{hilbert_table, HilbertTable};
use crate::linalg::RankPolicy;
use crate::monomial::{enumerate_monomials, GeneralMonomialIdeal, Monomial, MonomialIdeal, Permutation};
use crate::wlp::{classify_failure, wlp_report, FailureMode, WlpError, WlpOptions};

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Bounds(#[from] BoundsError),
    #[error(transparent)]
    Wlp(#[from] WlpError),
    #[error("{count} orbits exceed the cap of {cap}")]
    OrbitCap { count: usize, cap: usize },
    #[error("{0} mixed monomials do not fit the 128-bit subset encoding")]
    TooManyMonomials(usize),
    #[error("mu = {mu} lies in Sigma({n},{d}); sharpness does not apply")]
    InSigma { n: u32, d: u32, mu: u64 },
    #[error("mu = {mu} outside [{lo}, {hi}]")]
    MuRange { mu: u64, lo: u64, hi: u64 },
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub const DEFAULT_ORBIT_CAP: usize = 100_000;
/// Largest Hilbert function value a campaign will build matrices for.
pub const DEFAULT_MAX_DIMENSION: u64 = 5_000;

pub const DEFAULT_PAIRS: [(u32, u32); 10] = [(3, 2), (3, 3), (3, 4), (3, 5), (4, 2), (4, 3), (4, 4), (5, 2), (5, 3), (6, 2)];

/// Provenance of a constructed ideal, flattened for reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecipeSummary {
    pub family: Family,
    pub lineage: Vec<Family>,
    pub rationale: String,
    pub ideal: String,
    pub expected_failure_degree: Option<u32>,
    pub expected_mode: Option<FailureMode>,
    pub witnesses: usize,
}

impl From<&ConstructionRecipe> for RecipeSummary {
    fn from(r: &ConstructionRecipe) -> Self {
        Self {
            family: r.family,
            lineage: r.lineage(),
            rationale: r.rationale.clone(),
            ideal: r.ideal.to_text(),
            expected_failure_degree: r.expected_failure.map(|e| e.degree),
            expected_mode: r.expected_failure.and_then(|e| e.mode),
            witnesses: r.witnesses.len(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OutcomeKind {
    ConstructedAndFailed,
    AllOrbitsHaveWlp,
    Skipped,
    /// A construction that did not fail, or an ideal outside `Sigma` that
    /// fails.
    Discrepancy,
}

/// One generator count of one `(n, d)` pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MuRecord {
    pub pair: (u32, u32),
    pub mu: u64,
    pub outcome: OutcomeKind,
    pub recipe: Option<RecipeSummary>,
    pub failure_degree: Option<u32>,
    pub mode: Option<FailureMode>,
    pub certified: Option<bool>,
    pub orbit_count: Option<usize>,
    pub raw_count: Option<u128>,
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl MuRecord {
    fn new(pair: (u32, u32), mu: u64, outcome: OutcomeKind) -> Self {
        Self {
            pair,
            mu,
            outcome,
            recipe: None,
            failure_degree: None,
            mode: None,
            certified: None,
            orbit_count: None,
            raw_count: None,
            detail: None,
            elapsed_ms: None,
        }
    }

    fn skipped(pair: (u32, u32), mu: u64, reason: String) -> Self {
        let mut r = Self::new(pair, mu, OutcomeKind::Skipped);
        r.detail = Some(reason);
        r
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Totals {
    pub constructed: usize,
    pub all_orbits_wlp: usize,
    pub skipped: usize,
    pub discrepancies: usize,
}

impl Totals {
    fn add(&mut self, r: &MuRecord) {
        match r.outcome {
            OutcomeKind::ConstructedAndFailed => self.constructed += 1,
            OutcomeKind::AllOrbitsHaveWlp => self.all_orbits_wlp += 1,
            OutcomeKind::Skipped => self.skipped += 1,
            OutcomeKind::Discrepancy => self.discrepancies += 1,
        }
    }

    fn merge(&mut self, o: &Totals) {
        self.constructed += o.constructed;
        self.all_orbits_wlp += o.all_orbits_wlp;
        self.skipped += o.skipped;
        self.discrepancies += o.discrepancies;
    }

    pub fn total(&self) -> usize {
        self.constructed + self.all_orbits_wlp + self.skipped + self.discrepancies
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairReport {
    pub n: u32,
    pub d: u32,
    pub sigma: String,
    /// `mu` ranges over `[n, HF(S,d)]`.
    pub mu_range: (u64, u64),
    pub records: Vec<MuRecord>,
    pub totals: Totals,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CampaignReport {
    pub config: CampaignConfig,
    pub pairs: Vec<PairReport>,
    pub totals: Totals,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl CampaignReport {
    pub fn discrepancies(&self) -> impl Iterator<Item = &MuRecord> {
        self.pairs.iter().flat_map(|p| &p.records).filter(|r| r.outcome == OutcomeKind::Discrepancy)
    }

    /// Drop wall-clock fields so two runs can be compared byte for byte.
    pub fn without_timing(&self) -> Self {
        let mut c = self.clone();
        c.elapsed_ms = None;
        for p in &mut c.pairs {
            for r in &mut p.records {
                r.elapsed_ms = None;
            }
        }
        c
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CampaignConfig {
    pub pairs: Vec<(u32, u32)>,
    pub orbit_cap: usize,
    pub max_dimension: u64,
    pub policy: Option<RankPolicy>,
    pub seed: u64,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        Self {
            pairs: DEFAULT_PAIRS.to_vec(),
            orbit_cap: DEFAULT_ORBIT_CAP,
            max_dimension: DEFAULT_MAX_DIMENSION,
            policy: None,
            seed: 0,
        }
    }
}

impl CampaignConfig {
    fn options(&self) -> WlpOptions {
        WlpOptions {
            policy: self.policy,
            seed: self.seed,
        }
    }
}

fn elapsed_ms(start: Instant) -> Option<u64> {
    Some(start.elapsed().as_millis() as u64)
}

/// Construct and confirm one `mu` in `Sigma(n,d)`.
pub fn verify_existence_mu(n: u32, d: u32, mu: u64, config: &CampaignConfig) -> MuRecord {
    let start = Instant::now();
    let pair = (n, d);
    let recipe = match construct_failing_ideal(n, d, mu) {
        Ok(r) => r,
        Err(e) => {
            let mut rec = MuRecord::new(pair, mu, OutcomeKind::Discrepancy);
            rec.detail = Some(format!("no construction: {e}"));
            return rec;
        }
    };
    let mut rec = MuRecord::new(pair, mu, OutcomeKind::Discrepancy);
    rec.recipe = Some(RecipeSummary::from(&recipe));
    match hilbert_table(&recipe.ideal) {
        Ok(t) if t.values.iter().max().copied().unwrap_or(0) > config.max_dimension => {
            let mut s = MuRecord::skipped(pair, mu, format!("Hilbert function exceeds the dimension budget {}", config.max_dimension));
            s.recipe = rec.recipe;
            return s;
        }
        Err(e) => {
            rec.detail = Some(e.to_string());
            return rec;
        }
        Ok(_) => {}
    }
    let report = match wlp_report(&recipe.ideal, config.options()) {
        Ok(r) => r,
        Err(e) => {
            rec.detail = Some(e.to_string());
            return rec;
        }
    };
    rec.certified = Some(report.fully_certified());
    let mut problems = Vec::new();
    match report.verdict {
        crate::wlp::Verdict::HasWlp => problems.push("constructed ideal has the WLP".to_string()),
        crate::wlp::Verdict::Fails { degree, mode } => {
            rec.failure_degree = Some(degree);
            rec.mode = Some(mode);
        }
    }
    if let Some(e) = recipe.expected_failure {
        if !report.fails_at(e.degree) {
            problems.push(format!("expected failure in degree {} but failing degrees are {:?}", e.degree, report.failing_degrees));
        } else {
            rec.failure_degree = Some(e.degree);
            let observed = classify_failure(&report.records[e.degree as usize]).expect("failing record");
            rec.mode = Some(observed);
            if let Some(m) = e.mode {
                if !observed.consistent_with(m) {
                    problems.push(format!("expected {m} failure, observed {observed}"));
                }
            }
        }
    }
    for w in &recipe.witnesses {
        if !w.holds_for(&recipe.ideal) {
            problems.push(format!("witness {} does not hold", w.text()));
        }
    }
    if problems.is_empty() {
        rec.outcome = OutcomeKind::ConstructedAndFailed;
    } else {
        rec.detail = Some(problems.join("; "));
    }
    rec.elapsed_ms = elapsed_ms(start);
    rec
}

/// Existence half of a campaign: every `mu` in `Sigma(n,d)`.
pub fn verify_existence(n: u32, d: u32, config: &CampaignConfig) -> Result<Vec<MuRecord>, VerifyError> {
    let sigma = bounds::sigma(n, d)?;
    let mus: Vec<u64> = sigma.iter().collect();
    Ok(mus.into_par_iter().map(|mu| verify_existence_mu(n, d, mu, config)).collect())
}

/// Orbit representatives of artinian ideals with `mu` degree-`d` generators
/// in `n` variables under relabeling of the variables.
#[derive(Clone, Debug)]
pub struct OrbitEnumeration {
    pub representatives: Vec<MonomialIdeal>,
    /// Number of generator sets before identifying relabelings.
    pub raw_count: u128,
    /// Orbit sizes, aligned with `representatives`.
    pub orbit_sizes: Vec<usize>,
}

struct SubsetSpace {
    mixed: Vec<Monomial>,
    /// `tables[p][i]` is the index of the image of `mixed[i]` under the
    /// `p`-th permutation.
    tables: Vec<Vec<usize>>,
}

impl SubsetSpace {
    fn new(n: u32, d: u32) -> Result<Self, VerifyError> {
        let mixed: Vec<Monomial> = enumerate_monomials(n as usize, d).into_iter().filter(|m| m.pure_power_var().is_none()).collect();
        if mixed.len() > 128 {
            return Err(VerifyError::TooManyMonomials(mixed.len()));
        }
        let index: std::collections::HashMap<&Monomial, usize> = mixed.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let tables = Permutation::all(n as usize).map(|p| mixed.iter().map(|m| index[&m.permuted(&p)]).collect()).collect();
        Ok(Self { mixed, tables })
    }

    fn image(&self, table: &[usize], mut mask: u128) -> u128 {
        let mut out = 0u128;
        while mask != 0 {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            out |= 1u128 << table[i];
        }
        out
    }

    fn canonical(&self, mask: u128) -> u128 {
        self.tables.iter().map(|t| self.image(t, mask)).min().expect("identity permutation")
    }

    fn orbit_size(&self, mask: u128) -> usize {
        self.tables.iter().map(|t| self.image(t, mask)).collect::<HashSet<_>>().len()
    }
}

/// All `k`-subsets of `0..m` as bitmasks, in increasing numeric order.
fn for_each_subset(m: usize, k: usize, mut f: impl FnMut(u128) -> bool) {
    if k > m {
        return;
    }
    if k == 0 {
        f(0);
        return;
    }
    let limit: u128 = if m == 128 { u128::MAX } else { (1u128 << m) - 1 };
    let mut s: u128 = (1u128 << k) - 1;
    loop {
        if !f(s) {
            return;
        }
        // Gosper's hack
        let c = s & s.wrapping_neg();
        let r = s.wrapping_add(c);
        if r == 0 || r > limit {
            return;
        }
        s = (((r ^ s) >> 2) / c) | r;
        if s > limit {
            return;
        }
    }
}

pub fn enumerate_orbits(n: u32, d: u32, mu: u64, cap: usize) -> Result<OrbitEnumeration, VerifyError> {
    let hi = hf_polynomial_ring(n, d);
    if mu < n as u64 || mu > hi {
        return Err(VerifyError::MuRange { mu, lo: n as u64, hi });
    }
    let space = SubsetSpace::new(n, d)?;
    let m = space.mixed.len();
    let k = (mu - n as u64) as usize;
    // orbits of k-subsets and of their complements correspond; canonicalize
    // whichever side is smaller
    let complement = k > m - k;
    let side = if complement { m - k } else { k };
    let full: u128 = if m == 128 { u128::MAX } else { (1u128 << m) - 1 };
    let mut seen: HashSet<u128> = HashSet::new();
    let mut raw: u128 = 0;
    let mut over = false;
    for_each_subset(m, side, |s| {
        raw += 1;
        seen.insert(space.canonical(s));
        if seen.len() > cap {
            over = true;
            return false;
        }
        true
    });
    if over {
        return Err(VerifyError::OrbitCap { count: seen.len(), cap });
    }
    let mut keys: Vec<u128> = seen.into_iter().collect();
    keys.sort_unstable();
    let mut representatives = Vec::with_capacity(keys.len());
    let mut orbit_sizes = Vec::with_capacity(keys.len());
    for key in keys {
        let chosen = if complement { full ^ key } else { key };
        let gens = (0..m).filter(|&i| chosen >> i & 1 == 1).map(|i| space.mixed[i].clone());
        let pure = (0..n as usize).map(|i| Monomial::pure_power(n as usize, i, d));
        representatives.push(MonomialIdeal::new(n as usize, pure.chain(gens)).expect("distinct degree-d monomials"));
        orbit_sizes.push(space.orbit_size(key));
    }
    Ok(OrbitEnumeration {
        representatives,
        raw_count: raw,
        orbit_sizes,
    })
}

/// Exhaustive WLP check of every orbit for one `mu` outside `Sigma(n,d)`.
pub fn verify_sharpness(n: u32, d: u32, mu: u64, orbit_cap: usize, opts: WlpOptions) -> Result<MuRecord, VerifyError> {
    let start = Instant::now();
    let pair = (n, d);
    if bounds::sigma(n, d)?.contains(mu) {
        return Err(VerifyError::InSigma { n, d, mu });
    }
    let orbits = match enumerate_orbits(n, d, mu, orbit_cap) {
        Ok(o) => o,
        Err(VerifyError::OrbitCap { count, cap }) => {
            let mut r = MuRecord::skipped(pair, mu, format!("more than {cap} orbits (stopped at {count})"));
            r.elapsed_ms = elapsed_ms(start);
            return Ok(r);
        }
        Err(e) => return Err(e),
    };
    let verdicts: Vec<Result<(bool, bool), WlpError>> = orbits
        .representatives
        .par_iter()
        .map(|i| wlp_report(i, opts).map(|r| (r.has_wlp(), r.fully_certified())))
        .collect();
    let mut rec = MuRecord::new(pair, mu, OutcomeKind::AllOrbitsHaveWlp);
    rec.orbit_count = Some(orbits.representatives.len());
    rec.raw_count = Some(orbits.raw_count);
    let mut certified = true;
    let mut failing = Vec::new();
    for (ideal, v) in orbits.representatives.iter().zip(verdicts) {
        let (has, cert) = v?;
        certified &= cert;
        if !has {
            failing.push(ideal.to_text());
        }
    }
    rec.certified = Some(certified);
    if !failing.is_empty() {
        rec.outcome = OutcomeKind::Discrepancy;
        rec.detail = Some(format!("fails the WLP: ({})", failing.join("), (")));
    }
    rec.elapsed_ms = elapsed_ms(start);
    Ok(rec)
}

/// Existence and sharpness for one pair, covering every `mu` in `[n, HF(S,d)]`.
pub fn verify_pair(n: u32, d: u32, config: &CampaignConfig) -> Result<PairReport, VerifyError> {
    let sigma = bounds::sigma(n, d)?;
    let hi = hf_polynomial_ring(n, d);
    let mut records = verify_existence(n, d, config)?;
    for mu in n as u64..=hi {
        if !sigma.contains(mu) {
            records.push(verify_sharpness(n, d, mu, config.orbit_cap, config.options())?);
        }
    }
    records.sort_by_key(|r| r.mu);
    let mut totals = Totals::default();
    for r in &records {
        totals.add(r);
    }
    Ok(PairReport {
        n,
        d,
        sigma: sigma.to_string(),
        mu_range: (n as u64, hi),
        records,
        totals,
    })
}

pub fn run_campaign(config: &CampaignConfig) -> Result<CampaignReport, VerifyError> {
    let start = Instant::now();
    let mut pairs = Vec::new();
    let mut totals = Totals::default();
    for &(n, d) in &config.pairs {
        let p = verify_pair(n, d, config)?;
        totals.merge(&p.totals);
        pairs.push(p);
    }
    Ok(CampaignReport {
        config: config.clone(),
        pairs,
        totals,
        elapsed_ms: elapsed_ms(start),
    })
}

/// Write a report as pretty JSON.
pub fn write_report(report: &CampaignReport, path: &std::path::Path) -> Result<(), VerifyError> {
    let text = serde_json::to_string_pretty(report)?;
    std::fs::write(path, text + "\n")?;
    Ok(())
}

/// Outcome of checking the hypotheses of the gluing criterion for `K` and
/// the variable `x_j`: with `I = K + (x_j)` and `J = K : x_j`, if `S/I` and
/// `S/J` have the WLP and, for every `i`,
/// `HF_I(i) < HF_I(i+1)` implies `HF_J(i-1) <= HF_J(i)` and
/// `HF_I(i) > HF_I(i+1)` implies `HF_J(i-1) >= HF_J(i)`,
/// then `S/K` has the WLP.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GlueCheck {
    pub variable: usize,
    pub plus_var: String,
    pub colon_var: String,
    pub plus_hilbert: HilbertTable,
    pub colon_hilbert: HilbertTable,
    pub plus_has_wlp: bool,
    pub colon_has_wlp: bool,
    /// Degrees where one of the two implications fails.
    pub violations: Vec<u32>,
    pub hypotheses_hold: bool,
    /// Direct verdict on `S/K`, for cross-checking.
    pub k_has_wlp: bool,
}

/// `j` is 0-based.
pub fn glue_condition_check(k: &GeneralMonomialIdeal, j: usize, opts: WlpOptions) -> Result<GlueCheck, VerifyError> {
    let i_ideal = k.plus_var(j);
    let j_ideal = k.colon_var(j);
    let hi = hilbert_table(&i_ideal).map_err(WlpError::from)?;
    let hj = hilbert_table(&j_ideal).map_err(WlpError::from)?;
    let top = hi.values.len().max(hj.values.len()) as i64 + 1;
    let violations: Vec<u32> = (0..=top)
        .filter(|&i| {
            let (a, b) = (hi.get(i), hi.get(i + 1));
            let (c, e) = (hj.get(i - 1), hj.get(i));
            (a < b && c > e) || (a > b && c < e)
        })
        .map(|i| i as u32)
        .collect();
    let plus_has_wlp = wlp_report(&i_ideal, opts)?.has_wlp();
    let colon_has_wlp = wlp_report(&j_ideal, opts)?.has_wlp();
    let k_has_wlp = wlp_report(k, opts)?.has_wlp();
    Ok(GlueCheck {
        variable: j,
        plus_var: i_ideal.to_text(),
        colon_var: j_ideal.to_text(),
        plus_hilbert: hi,
        colon_hilbert: hj,
        plus_has_wlp,
        colon_has_wlp,
        hypotheses_hold: violations.is_empty() && plus_has_wlp && colon_has_wlp,
        violations,
        k_has_wlp,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::binomial;

    #[test]
    fn subsets_enumerated_once() {
        let mut all = Vec::new();
        for_each_subset(6, 3, |s| {
            all.push(s);
            true
        });
        assert_eq!(all.len(), 20);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all.iter().all(|s| s.count_ones() == 3 && *s < 64));
        let mut n = 0;
        for_each_subset(5, 0, |_| {
            n += 1;
            true
        });
        assert_eq!(n, 1);
    }

    #[test]
    fn orbit_stabilizer_accounting() {
        for (n, d, mu) in [(3, 3, 6), (4, 2, 7), (4, 3, 5), (5, 2, 8), (3, 4, 9), (6, 2, 10)] {
            let o = enumerate_orbits(n, d, mu, DEFAULT_ORBIT_CAP).unwrap();
            let m = (hf_polynomial_ring(n, d) - n as u64) as u128;
            let k = (mu - n as u64) as u128;
            assert_eq!(o.raw_count, binomial(m, k.min(m - k)));
            assert_eq!(o.orbit_sizes.iter().map(|&s| s as u128).sum::<u128>(), o.raw_count, "({n},{d},{mu})");
            // representatives are pairwise non-isomorphic
            let canon: HashSet<_> = o.representatives.iter().map(|i| crate::monomial::canonical_form(i).unwrap()).collect();
            assert_eq!(canon.len(), o.representatives.len());
        }
    }

    #[test]
    fn known_orbit_counts() {
        assert_eq!(enumerate_orbits(4, 3, 5, DEFAULT_ORBIT_CAP).unwrap().representatives.len(), 2);
        assert_eq!(enumerate_orbits(5, 2, 8, DEFAULT_ORBIT_CAP).unwrap().representatives.len(), 4);
        // graphs on six vertices with four edges
        assert_eq!(enumerate_orbits(6, 2, 10, DEFAULT_ORBIT_CAP).unwrap().representatives.len(), 9);
        assert_eq!(enumerate_orbits(4, 2, 4, 10).unwrap().representatives.len(), 1);
        assert!(matches!(enumerate_orbits(6, 2, 10, 3), Err(VerifyError::OrbitCap { .. })));
    }

    #[test]
    fn sharpness_small() {
        let r = verify_sharpness(4, 3, 5, DEFAULT_ORBIT_CAP, WlpOptions::certified()).unwrap();
        assert_eq!(r.outcome, OutcomeKind::AllOrbitsHaveWlp);
        assert!(matches!(verify_sharpness(3, 3, 4, 10, WlpOptions::certified()), Err(VerifyError::InSigma { .. })));
        let capped = verify_sharpness(6, 2, 10, 3, WlpOptions::certified()).unwrap();
        assert_eq!(capped.outcome, OutcomeKind::Skipped);
    }

    #[test]
    fn glue_on_two_mixed_generators() {
        let n = 7;
        let mut gens: Vec<Monomial> = (0..n).map(|i| Monomial::pure_power(n, i, 2)).collect();
        gens.push(Monomial::var(n, 0).mul(&Monomial::var(n, 1)));
        gens.push(Monomial::var(n, 0).mul(&Monomial::var(n, 2)));
        let k = GeneralMonomialIdeal::new(n, gens);
        let g = glue_condition_check(&k, 0, WlpOptions::certified()).unwrap();
        assert!(g.hypotheses_hold, "{g:?}");
        assert!(g.k_has_wlp);
        assert_eq!(crate::hilbert::isolated_peaks(&g.plus_hilbert), vec![3]);
        assert_eq!(crate::hilbert::isolated_peaks(&g.colon_hilbert), vec![2]);
    }

    #[test]
    fn glue_soundness_on_small_ideals() {
        for text in ["x1^2,x2^2,x3^2", "x1^3,x2^3,x3^3,x1*x2*x3", "x1^2,x2^2,x3^2,x4^2,x1*x2,x3*x4", "x1^3,x2^3,x3^3,x1^2*x2"] {
            let k = GeneralMonomialIdeal::from(&MonomialIdeal::parse(text).unwrap());
            for j in 0..k.generators()[0].nvars() {
                let g = glue_condition_check(&k, j, WlpOptions::certified()).unwrap();
                if g.hypotheses_hold {
                    assert!(g.k_has_wlp, "{text} j={j}");
                }
            }
        }
    }

    #[test]
    fn tiny_campaign_accounts_for_every_mu() {
        let config = CampaignConfig {
            pairs: vec![(3, 2), (3, 3), (4, 2)],
            ..Default::default()
        };
        let rep = run_campaign(&config).unwrap();
        for p in &rep.pairs {
            let mus: Vec<u64> = p.records.iter().map(|r| r.mu).collect();
            let want: Vec<u64> = (p.mu_range.0..=p.mu_range.1).collect();
            assert_eq!(mus, want);
        }
        assert_eq!(rep.totals.discrepancies, 0);
        assert_eq!(rep.totals.constructed, 2);
        let again = run_campaign(&config).unwrap();
        assert_eq!(serde_json::to_string(&rep.without_timing()).unwrap(), serde_json::to_string(&again.without_timing()).unwrap());
    }
}
