//! Monomials, equigenerated monomial ideals, standard-monomial bases and
//! variable relabelings.
//!
//! Monomials are dense exponent vectors. The canonical listing order used
//! throughout the crate is graded reverse lexicographic with
//! `x1 > x2 > ... > xn`, listed from the largest monomial down: lower degrees
//! first, and inside a degree `x1^2, x1*x2, x2^2, x1*x3, x2*x3, x3^2, ...`.
//! The `Ord` impl of [`Monomial`] is exactly this listing order, so sorting a
//! vector of monomials puts it in canonical order.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest variable count accepted by [`canonical_form`] (it visits all `n!`
/// relabelings).
pub const MAX_CANONICAL_VARS: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdealError {
    #[error("an ideal needs at least one generator")]
    NoGenerators,
    #[error("generator {generator} has degree {found}, expected {expected} (mixed degrees are not allowed)")]
    MixedDegrees {
        generator: String,
        expected: u32,
        found: u32,
    },
    #[error("generator {generator} lives in {found} variables, ideal has {expected}")]
    VariableCount {
        generator: String,
        expected: usize,
        found: usize,
    },
    #[error("duplicate generator {0}")]
    Duplicate(String),
    #[error("generators must have positive degree")]
    ZeroDegree,
    #[error("canonical form is computed by brute force and refuses n = {0} > {max}", max = MAX_CANONICAL_VARS)]
    TooManyVariables(usize),
    #[error("{0} is not a permutation of 0..{1}")]
    BadPermutation(String, usize),
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
}

/// A monomial `x1^e1 * ... * xn^en` stored as its exponent vector.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Self { exps, degree }
    }

    pub fn one(nvars: usize) -> Self {
        Self::new(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::pure_power(nvars, i, 1)
    }

    pub fn pure_power(nvars: usize, i: usize, e: u32) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = e;
        Self::new(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    /// `self | other`
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect())
    }

    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps[i] += 1;
        Monomial {
            exps,
            degree: self.degree + 1,
        }
    }

    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        if self.exps[i] == 0 {
            return None;
        }
        let mut exps = self.exps.clone();
        exps[i] -= 1;
        Some(Monomial {
            exps,
            degree: self.degree - 1,
        })
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect())
    }

    /// Number of variables with a positive exponent.
    pub fn support_size(&self) -> usize {
        self.exps.iter().filter(|&&e| e > 0).count()
    }

    /// `Some(i)` when the monomial is `xi^e` with `e > 0`.
    pub fn pure_power_var(&self) -> Option<usize> {
        if self.support_size() == 1 {
            self.exps.iter().position(|&e| e > 0)
        } else {
            None
        }
    }

    /// Relabel variables: `x_i` becomes `x_{perm(i)}`.
    pub fn permuted(&self, perm: &Permutation) -> Monomial {
        let mut exps = vec![0; self.exps.len()];
        for (i, &e) in self.exps.iter().enumerate() {
            exps[perm.image(i)] = e;
        }
        Monomial {
            exps,
            degree: self.degree,
        }
    }

    /// Monomial in `nvars` variables whose exponents are `self` placed at
    /// positions `offset..offset + self.nvars()`.
    pub fn embedded(&self, nvars: usize, offset: usize) -> Monomial {
        let mut exps = vec![0; nvars];
        exps[offset..offset + self.exps.len()].copy_from_slice(&self.exps);
        Monomial {
            exps,
            degree: self.degree,
        }
    }

    /// Text form using `x` as the variable letter, e.g. `x1^2*x3`.
    pub fn to_text(&self) -> String {
        self.to_text_with('x')
    }

    pub fn to_text_with(&self, letter: char) -> String {
        if self.degree == 0 {
            return "1".to_string();
        }
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    format!("{letter}{}", i + 1)
                } else {
                    format!("{letter}{}^{e}", i + 1)
                }
            })
            .join("*")
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| self.exps.iter().rev().cmp(other.exps.iter().rev()))
            .then_with(|| self.exps.len().cmp(&other.exps.len()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

/// A bijection of `{0, .., n-1}`; variable `x_i` is sent to `x_{image(i)}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, IdealError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(IdealError::BadPermutation(format!("{images:?}"), n));
            }
            seen[i] = true;
        }
        Ok(Self(images))
    }

    pub fn identity(n: usize) -> Self {
        Self((0..n).collect())
    }

    /// The transposition swapping `i` and `j`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i, j);
        Self(images)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn image(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// All `n!` permutations in lexicographic order of their image vectors.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (0..n).permutations(n).map(Permutation)
    }
}

/// Every monomial of degree `degree` in `nvars` variables, in canonical order.
///
/// There are `C(nvars + degree - 1, degree)` of them; degree 0 yields the
/// single constant monomial.
pub fn enumerate_monomials(nvars: usize, degree: u32) -> Vec<Monomial> {
    assert!(nvars >= 1, "need at least one variable");
    let mut out = Vec::new();
    let mut exps = vec![0u32; nvars];
    fill_compositions(&mut exps, 0, degree, &mut out);
    out.sort();
    out
}

fn fill_compositions(exps: &mut [u32], pos: usize, remaining: u32, out: &mut Vec<Monomial>) {
    if pos + 1 == exps.len() {
        exps[pos] = remaining;
        out.push(Monomial::new(exps.to_vec()));
        return;
    }
    for e in 0..=remaining {
        exps[pos] = e;
        fill_compositions(exps, pos + 1, remaining - e, out);
    }
    exps[pos] = 0;
}

/// Monomial ideal minimally generated by distinct monomials of one degree.
///
/// Distinct monomials of equal degree never divide one another, so the stored
/// generator list is automatically a minimal generating set and its length is
/// the minimal number of generators.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialIdeal {
    nvars: usize,
    degree: u32,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self, IdealError> {
        let gens: Vec<Monomial> = gens.into_iter().collect();
        let first = gens.first().ok_or(IdealError::NoGenerators)?;
        let degree = first.degree();
        if degree == 0 {
            return Err(IdealError::ZeroDegree);
        }
        let mut set = BTreeSet::new();
        for g in &gens {
            if g.nvars() != nvars {
                return Err(IdealError::VariableCount {
                    generator: g.to_text(),
                    expected: nvars,
                    found: g.nvars(),
                });
            }
            if g.degree() != degree {
                return Err(IdealError::MixedDegrees {
                    generator: g.to_text(),
                    expected: degree,
                    found: g.degree(),
                });
            }
            if !set.insert(g.clone()) {
                return Err(IdealError::Duplicate(g.to_text()));
            }
        }
        Ok(Self {
            nvars,
            degree,
            gens: set.into_iter().collect(),
        })
    }

    /// `(x1^d, ..., xn^d)`
    pub fn complete_intersection(nvars: usize, degree: u32) -> Self {
        Self::new(nvars, (0..nvars).map(|i| Monomial::pure_power(nvars, i, degree)))
            .expect("pure powers form a valid ideal")
    }

    /// Parse the text format: comma separated monomials written with `^`
    /// powers and `*` products, e.g. `x1^3,x2^3,x3^3,x1*x2*x3`. Whitespace is
    /// ignored. The variable count is the largest index that occurs.
    pub fn parse(text: &str) -> Result<Self, IdealError> {
        Self::parse_in(text, None)
    }

    /// Like [`MonomialIdeal::parse`] with an explicit variable count.
    pub fn parse_in(text: &str, nvars: Option<usize>) -> Result<Self, IdealError> {
        let parsed = parse_monomial_list(text)?;
        if parsed.is_empty() {
            return Err(IdealError::NoGenerators);
        }
        let max_var = parsed
            .iter()
            .flat_map(|(_, factors)| factors.iter().map(|(v, _)| *v))
            .max()
            .unwrap_or(0);
        let n = nvars.unwrap_or(max_var);
        if max_var > n || n == 0 {
            return Err(IdealError::Parse {
                position: 0,
                message: format!("variable x{max_var} out of range for {n} variables"),
            });
        }
        let mut gens = Vec::with_capacity(parsed.len());
        let mut expected: Option<u32> = None;
        for (position, factors) in parsed {
            let mut exps = vec![0u32; n];
            for (v, e) in factors {
                exps[v - 1] += e;
            }
            let m = Monomial::new(exps);
            match expected {
                None => expected = Some(m.degree()),
                Some(d) if d != m.degree() => {
                    return Err(IdealError::Parse {
                        position,
                        message: format!(
                            "generator {} has degree {}, but the first generator has degree {d}; \
                             ideals must be generated in a single degree",
                            m.to_text(),
                            m.degree()
                        ),
                    })
                }
                _ => {}
            }
            gens.push(m);
        }
        Self::new(n, gens)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    /// Minimal number of generators.
    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    /// For an equigenerated monomial ideal, artinian exactly when every pure
    /// power `xi^d` is a generator.
    pub fn is_artinian(&self) -> bool {
        (0..self.nvars).all(|i| self.has_generator(&Monomial::pure_power(self.nvars, i, self.degree)))
    }

    pub fn has_generator(&self, m: &Monomial) -> bool {
        self.gens.binary_search(m).is_ok()
    }

    /// Whether the monomial lies in the ideal.
    pub fn contains(&self, m: &Monomial) -> bool {
        m.degree() >= self.degree && self.gens.iter().any(|g| g.divides(m))
    }

    /// Largest degree in which the quotient can be nonzero, `n(d-1)`, when
    /// the ideal is artinian.
    pub fn socle_bound(&self) -> Option<u32> {
        self.is_artinian().then(|| self.nvars as u32 * (self.degree - 1))
    }

    /// Generators that are not pure powers.
    pub fn mixed_generators(&self) -> impl Iterator<Item = &Monomial> {
        self.gens.iter().filter(|g| g.pure_power_var().is_none())
    }

    pub fn with_generators(&self, extra: impl IntoIterator<Item = Monomial>) -> Result<Self, IdealError> {
        Self::new(self.nvars, self.gens.iter().cloned().chain(extra))
    }

    pub fn permuted(&self, perm: &Permutation) -> Result<Self, IdealError> {
        if perm.len() != self.nvars {
            return Err(IdealError::BadPermutation(format!("{:?}", perm.images()), self.nvars));
        }
        Self::new(self.nvars, self.gens.iter().map(|g| g.permuted(perm)))
    }

    pub fn to_text(&self) -> String {
        self.gens.iter().map(Monomial::to_text).join(",")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_text())
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

type ParsedMonomial = (usize, Vec<(usize, u32)>);

fn parse_monomial_list(text: &str) -> Result<Vec<ParsedMonomial>, IdealError> {
    let bytes = text.as_bytes();
    let mut pos = 0;
    let err = |position: usize, message: &str| IdealError::Parse {
        position,
        message: message.to_string(),
    };
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    let number = |pos: &mut usize| -> Option<u64> {
        let start = *pos;
        while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
            *pos += 1;
        }
        text[start..*pos].parse().ok()
    };

    let mut out = Vec::new();
    skip_ws(&mut pos);
    if pos == bytes.len() {
        return Ok(out);
    }
    loop {
        skip_ws(&mut pos);
        let start = pos;
        let mut factors = Vec::new();
        loop {
            skip_ws(&mut pos);
            if pos >= bytes.len() || !(bytes[pos] == b'x' || bytes[pos] == b'X') {
                return Err(err(pos, "expected a variable such as x1"));
            }
            pos += 1;
            skip_ws(&mut pos);
            let var_pos = pos;
            let var = number(&mut pos).ok_or_else(|| err(var_pos, "expected a variable index"))?;
            if var == 0 {
                return Err(err(var_pos, "variables are numbered from 1"));
            }
            skip_ws(&mut pos);
            let mut e = 1u32;
            if pos < bytes.len() && bytes[pos] == b'^' {
                pos += 1;
                skip_ws(&mut pos);
                let e_pos = pos;
                let value = number(&mut pos).ok_or_else(|| err(e_pos, "expected an exponent"))?;
                e = u32::try_from(value).map_err(|_| err(e_pos, "exponent too large"))?;
                skip_ws(&mut pos);
            }
            if e > 0 {
                factors.push((var as usize, e));
            }
            if pos < bytes.len() && bytes[pos] == b'*' {
                pos += 1;
                continue;
            }
            break;
        }
        out.push((start, factors));
        skip_ws(&mut pos);
        if pos == bytes.len() {
            break;
        }
        if bytes[pos] != b',' {
            return Err(err(pos, "expected ',' between generators"));
        }
        pos += 1;
    }
    Ok(out)
}

/// Standard monomial basis of one graded piece of `S/I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeBasis {
    pub degree: u32,
    pub monomials: Vec<Monomial>,
}

impl DegreeBasis {
    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    /// Position of every basis monomial.
    pub fn index(&self) -> HashMap<&Monomial, usize> {
        self.monomials.iter().enumerate().map(|(i, m)| (m, i)).collect()
    }
}

/// Anything that decides membership of monomials in a monomial ideal; lets the
/// quotient machinery run on ideals that are not equigenerated (colon ideals
/// and ideals plus a variable, as used by the glue check).
pub trait MonomialQuotient: Sync {
    fn nvars(&self) -> usize;
    fn contains(&self, m: &Monomial) -> bool;
    /// An upper bound on the degrees where the quotient is nonzero, or `None`
    /// when the quotient is not artinian.
    fn socle_bound(&self) -> Option<u32>;
    fn describe(&self) -> String;

    /// Largest exponent of `x_var` in any standard monomial, if bounded.
    fn exponent_cap(&self, var: usize) -> Option<u32> {
        let _ = var;
        None
    }
}

impl MonomialQuotient for MonomialIdeal {
    fn nvars(&self) -> usize {
        self.nvars
    }

    fn contains(&self, m: &Monomial) -> bool {
        MonomialIdeal::contains(self, m)
    }

    fn socle_bound(&self) -> Option<u32> {
        MonomialIdeal::socle_bound(self)
    }

    fn describe(&self) -> String {
        self.to_text()
    }

    fn exponent_cap(&self, var: usize) -> Option<u32> {
        self.has_generator(&Monomial::pure_power(self.nvars, var, self.degree))
            .then(|| self.degree - 1)
    }
}

/// Degree-`degree` monomials not in the ideal, in canonical order.
pub fn quotient_basis<Q: MonomialQuotient + ?Sized>(ideal: &Q, degree: u32) -> DegreeBasis {
    if let Some(bound) = ideal.socle_bound() {
        if degree > bound {
            return DegreeBasis {
                degree,
                monomials: Vec::new(),
            };
        }
    }
    let caps: Vec<u32> = (0..ideal.nvars()).map(|v| ideal.exponent_cap(v).unwrap_or(degree)).collect();
    let mut monomials = Vec::new();
    let mut exps = vec![0u32; ideal.nvars()];
    bounded_compositions(&caps, &mut exps, 0, degree, &mut |e| {
        let m = Monomial::new(e.to_vec());
        if !ideal.contains(&m) {
            monomials.push(m);
        }
    });
    monomials.sort();
    DegreeBasis { degree, monomials }
}

fn bounded_compositions(caps: &[u32], exps: &mut [u32], pos: usize, remaining: u32, visit: &mut impl FnMut(&[u32])) {
    if pos + 1 == exps.len() {
        if remaining <= caps[pos] {
            exps[pos] = remaining;
            visit(exps);
            exps[pos] = 0;
        }
        return;
    }
    let rest_cap: u32 = caps[pos + 1..].iter().sum();
    let lo = remaining.saturating_sub(rest_cap);
    for e in lo..=remaining.min(caps[pos]) {
        exps[pos] = e;
        bounded_compositions(caps, exps, pos + 1, remaining - e, visit);
    }
    exps[pos] = 0;
}

/// Relabel the variables of an ideal.
pub fn permute_ideal(ideal: &MonomialIdeal, perm: &Permutation) -> Result<MonomialIdeal, IdealError> {
    ideal.permuted(perm)
}

/// Orbit representative under variable relabeling: the relabeled ideal whose
/// canonically sorted generator list is lexicographically smallest.
pub fn canonical_form(ideal: &MonomialIdeal) -> Result<MonomialIdeal, IdealError> {
    let n = ideal.nvars();
    if n > MAX_CANONICAL_VARS {
        return Err(IdealError::TooManyVariables(n));
    }
    let mut best: Option<Vec<Monomial>> = None;
    for perm in Permutation::all(n) {
        let mut gens: Vec<Monomial> = ideal.generators().iter().map(|g| g.permuted(&perm)).collect();
        gens.sort();
        if best.as_ref().is_none_or(|b| gens < *b) {
            best = Some(gens);
        }
    }
    MonomialIdeal::new(n, best.expect("at least the identity permutation"))
}

/// Ideal whose generators may have different degrees; generators are kept
/// minimal. Used for `K + (x_j)` and `K : x_j`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GeneralMonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl GeneralMonomialIdeal {
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Self {
        let mut all: Vec<Monomial> = gens.into_iter().collect();
        all.sort();
        all.dedup();
        let mut minimal: Vec<Monomial> = Vec::new();
        for g in all {
            assert_eq!(g.nvars(), nvars, "generator in the wrong number of variables");
            // sorted by degree, so only earlier generators can divide g
            if !minimal.iter().any(|h| h.divides(&g)) {
                minimal.push(g);
            }
        }
        Self { nvars, gens: minimal }
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    /// `I + (x_j)`
    pub fn plus_var(&self, j: usize) -> Self {
        Self::new(self.nvars, self.gens.iter().cloned().chain([Monomial::var(self.nvars, j)]))
    }

    /// `I : (x_j)`
    pub fn colon_var(&self, j: usize) -> Self {
        Self::new(
            self.nvars,
            self.gens.iter().map(|g| g.div_var(j).unwrap_or_else(|| g.clone())),
        )
    }

    pub fn is_artinian(&self) -> bool {
        (0..self.nvars).all(|i| self.gens.iter().any(|g| g.pure_power_var() == Some(i)))
    }

    pub fn to_text(&self) -> String {
        self.gens.iter().map(Monomial::to_text).join(",")
    }
}

impl From<&MonomialIdeal> for GeneralMonomialIdeal {
    fn from(ideal: &MonomialIdeal) -> Self {
        Self {
            nvars: ideal.nvars(),
            gens: ideal.generators().to_vec(),
        }
    }
}

impl MonomialQuotient for GeneralMonomialIdeal {
    fn nvars(&self) -> usize {
        self.nvars
    }

    fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    fn socle_bound(&self) -> Option<u32> {
        // sum over variables of (smallest pure power exponent - 1)
        let mut total = 0;
        for i in 0..self.nvars {
            let e = self
                .gens
                .iter()
                .filter(|g| g.pure_power_var() == Some(i))
                .map(|g| g.exp(i))
                .min()?;
            total += e - 1;
        }
        Some(total)
    }

    fn describe(&self) -> String {
        self.to_text()
    }

    fn exponent_cap(&self, var: usize) -> Option<u32> {
        self.gens
            .iter()
            .filter(|g| g.pure_power_var() == Some(var))
            .map(|g| g.exp(var) - 1)
            .min()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: u64, k: u64) -> u64 {
        num_integer::binomial(n, k)
    }

    #[test]
    fn enumeration_counts_match_stars_and_bars() {
        for n in 1..=5usize {
            for i in 0..=6u32 {
                assert_eq!(enumerate_monomials(n, i).len() as u64, binom(n as u64 + i as u64 - 1, i as u64));
            }
        }
        assert_eq!(enumerate_monomials(3, 2).len(), 6);
        assert_eq!(enumerate_monomials(1, 5), vec![Monomial::new(vec![5])]);
        assert_eq!(enumerate_monomials(8, 4).len(), 330);
        assert_eq!(enumerate_monomials(4, 0), vec![Monomial::one(4)]);
    }

    #[test]
    fn canonical_order_is_grevlex_descending() {
        let order: Vec<String> = enumerate_monomials(3, 2).iter().map(|m| m.to_text()).collect();
        assert_eq!(order, ["x1^2", "x1*x2", "x2^2", "x1*x3", "x2*x3", "x3^2"]);
    }

    #[test]
    fn parse_and_print() {
        let i = MonomialIdeal::parse(" x1^3, x2^3 ,x3^3,x1*x2*x3 ").unwrap();
        assert_eq!(i.nvars(), 3);
        assert_eq!(i.degree(), 3);
        assert_eq!(i.num_generators(), 4);
        assert!(i.is_artinian());
        assert_eq!(MonomialIdeal::parse(&i.to_text()).unwrap(), i);
    }

    #[test]
    fn parser_rejects_mixed_degrees_with_position() {
        let err = MonomialIdeal::parse("x1^3,x2^2").unwrap_err();
        match err {
            IdealError::Parse { position, message } => {
                assert_eq!(position, 5);
                assert!(message.contains("single degree"), "{message}");
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(MonomialIdeal::parse("x1^2,,x2^2"), Err(IdealError::Parse { position: 5, .. })));
        assert!(matches!(MonomialIdeal::parse("x1^2,x1^2"), Err(IdealError::Duplicate(_))));
        assert!(matches!(MonomialIdeal::parse("y1"), Err(IdealError::Parse { position: 0, .. })));
        assert!(matches!(MonomialIdeal::parse("x0"), Err(IdealError::Parse { .. })));
    }

    #[test]
    fn repeated_factors_accumulate() {
        let i = MonomialIdeal::parse("x1*x1*x2,x2^3,x1^3").unwrap();
        assert!(i.has_generator(&Monomial::new(vec![2, 1])));
    }

    #[test]
    fn equal_degree_generators_never_divide_each_other() {
        // minimality of equigenerated sets is definitional
        for n in 1..=3 {
            for d in 1..=4 {
                let all = enumerate_monomials(n, d);
                for a in &all {
                    for b in &all {
                        assert_eq!(a.divides(b), a == b);
                    }
                }
            }
        }
    }

    #[test]
    fn togliatti_quotient_bases() {
        let t = MonomialIdeal::parse("x1^3,x2^3,x3^3,x1*x2*x3").unwrap();
        assert_eq!(quotient_basis(&t, 3).len(), 6);
        assert!(quotient_basis(&t, 5).is_empty());
        assert_eq!(quotient_basis(&t, 0).monomials, vec![Monomial::one(3)]);
        for i in 0..7 {
            let b = quotient_basis(&t, i);
            assert!(b.monomials.windows(2).all(|w| w[0] < w[1]));
            assert!(b.monomials.iter().all(|m| !t.contains(m)));
        }
    }

    #[test]
    fn permutation_relabels_generators() {
        let i = MonomialIdeal::parse("x1^2,x2^2,x3^2,x1*x2").unwrap();
        let sigma = Permutation::transposition(3, 0, 2);
        let j = permute_ideal(&i, &sigma).unwrap();
        assert_eq!(j, MonomialIdeal::parse("x3^2,x2^2,x1^2,x3*x2").unwrap());
        assert_eq!(permute_ideal(&i, &Permutation::identity(3)).unwrap(), i);
        assert!(Permutation::new(vec![0, 0, 1]).is_err());
    }

    #[test]
    fn canonical_form_is_constant_on_orbits() {
        let ideals = [
            "x1^2,x2^2,x3^2,x1*x2",
            "x1^3,x2^3,x3^3,x1*x2^2,x2*x3^2",
            "x1^2,x2^2,x3^2,x1*x3,x2*x3",
        ];
        for text in ideals {
            let i = MonomialIdeal::parse(text).unwrap();
            let c = canonical_form(&i).unwrap();
            assert_eq!(canonical_form(&c).unwrap(), c);
            for perm in Permutation::all(3) {
                assert_eq!(canonical_form(&i.permuted(&perm).unwrap()).unwrap(), c);
            }
        }
    }

    #[test]
    fn canonical_form_refuses_large_n() {
        let i = MonomialIdeal::complete_intersection(9, 2);
        assert_eq!(canonical_form(&i), Err(IdealError::TooManyVariables(9)));
    }

    #[test]
    fn three_edge_graphs_on_five_vertices() {
        // quadratic ideals (x1^2..x5^2 + three edges) up to relabeling
        let mixed: Vec<Monomial> = enumerate_monomials(5, 2).into_iter().filter(|m| m.pure_power_var().is_none()).collect();
        let base = MonomialIdeal::complete_intersection(5, 2);
        let mut orbits = BTreeSet::new();
        for edges in mixed.iter().combinations(3) {
            let ideal = base.with_generators(edges.into_iter().cloned()).unwrap();
            assert_eq!(ideal.num_generators(), 8);
            orbits.insert(canonical_form(&ideal).unwrap().to_text());
        }
        assert_eq!(orbits.len(), 4);
    }

    #[test]
    fn general_ideal_colon_and_sum() {
        let k = GeneralMonomialIdeal::from(&MonomialIdeal::parse("x1^2,x2^2,x3^2,x4^2,x1*x2,x1*x3").unwrap());
        let i = k.plus_var(0);
        assert_eq!(i.to_text(), "x1,x2^2,x3^2,x4^2");
        let j = k.colon_var(0);
        assert_eq!(j.to_text(), "x1,x2,x3,x4^2");
        assert!(i.is_artinian() && j.is_artinian());
        assert_eq!(j.socle_bound(), Some(1));
    }
}
