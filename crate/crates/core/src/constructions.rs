//! Equigenerated monomial ideals failing the WLP, with the data that explains
//! why: expected failure degree and mode, and explicit kernel witnesses.
//!
//! [`construct_failing_ideal`] picks a family for every admissible generator
//! count, using the two-variable complete-intersection lift
//! ([`extend_by_ci_square`]) to climb in the number of variables.

use std::fmt;
use std::str::FromStr;

use num_integer::binomial;
use num_rational::BigRational;
use num_traits::One;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::bounds::{self, delta, BoundsError};
use crate::inverse::{in_inverse_system, is_primal_kernel_element, primal_kernel_basis, Polynomial};
use crate::monomial::{enumerate_monomials, IdealError, Monomial, MonomialIdeal};
use crate::wlp::FailureMode;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("mu = {mu} is not in Sigma({n},{d}) = {sigma}: every such ideal has the WLP or none exists")]
    OutsideSigma { n: u32, d: u32, mu: u64, sigma: String },
    #[error("{family}: {reason}")]
    OutOfRange { family: Family, reason: String },
    #[error("tensor factors have generator degrees {0} and {1}")]
    MixedDegrees(u32, u32),
    #[error(transparent)]
    Bounds(#[from] BoundsError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

type Result<T> = std::result::Result<T, ConstructionError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// `(x_i^d, x_i x_n^(d-1))`, `2n-1` generators.
    InjectivityBase,
    /// The base family plus extra generators up to `Delta(n,d)`.
    InjectivityAugmented,
    /// All degree-`d` annihilators of one dual polynomial.
    SurjectivityAnnihilator,
    /// Subsets of the annihilator family down to `Delta(n,d)` generators.
    SurjectivitySubset,
    /// Tensor with `k[y1,y2]/(y1^d, y2^d)`.
    CiSquareLift,
    EvenAci,
    OddAci,
    /// `(x1^d, x2^d, x3^d, x1^a x2^b x3^c)` with `d = 6k+3`.
    ThreeVarAci6k3,
    /// Tensor products of `k[V]/V^2` with blocks of size at most 3.
    QuadraticBlocks,
    /// `(x_i^d, x1^(d-1) x_j for 1 < j < n)`.
    Corner2n2,
    /// `(x1^d..x4^d, x1^(d-1) x2, x3^(d-1) x4)`.
    FourVarPaired,
    /// `(x1^3..x5^3, x1^2 x2, x1 x2^2)`, optionally with `x3 x4 x5`.
    FiveVarCubic,
    /// `(x1^d..x4^d, x1^3 x2^(d-3))`.
    FourVarAci,
    /// Togliatti system tensored with the cubic complete intersection.
    TogliattiCi,
    /// `(x1^d..x5^d, x1^ceil(d/2) x2^floor(d/2))`.
    FiveVarAci,
    /// `(x1^4..x5^4, x1 x2 x3 x4)`.
    FiveVarQuarticAci,
    /// `(x1^2..x7^2, x1x7, x2x7, x3x7, x4x7)`.
    SevenVarQuadraticSpecial,
    /// `(x1^n..xn^n, x1...xn)`.
    ProductAci,
}

impl Family {
    pub const ALL: [Family; 18] = [
        Family::InjectivityBase,
        Family::InjectivityAugmented,
        Family::SurjectivityAnnihilator,
        Family::SurjectivitySubset,
        Family::CiSquareLift,
        Family::EvenAci,
        Family::OddAci,
        Family::ThreeVarAci6k3,
        Family::QuadraticBlocks,
        Family::Corner2n2,
        Family::FourVarPaired,
        Family::FiveVarCubic,
        Family::FourVarAci,
        Family::TogliattiCi,
        Family::FiveVarAci,
        Family::FiveVarQuarticAci,
        Family::SevenVarQuadraticSpecial,
        Family::ProductAci,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Family::InjectivityBase => "injectivity-base",
            Family::InjectivityAugmented => "injectivity-augmented",
            Family::SurjectivityAnnihilator => "surjectivity-annihilator",
            Family::SurjectivitySubset => "surjectivity-subset",
            Family::CiSquareLift => "ci-square-lift",
            Family::EvenAci => "even-aci",
            Family::OddAci => "odd-aci",
            Family::ThreeVarAci6k3 => "three-var-aci-6k3",
            Family::QuadraticBlocks => "quadratic-blocks",
            Family::Corner2n2 => "corner-2n-2",
            Family::FourVarPaired => "four-var-paired",
            Family::FiveVarCubic => "five-var-cubic",
            Family::FourVarAci => "four-var-aci",
            Family::TogliattiCi => "togliatti-ci",
            Family::FiveVarAci => "five-var-aci",
            Family::FiveVarQuarticAci => "five-var-quartic-aci",
            Family::SevenVarQuadraticSpecial => "seven-var-quadratic-special",
            Family::ProductAci => "product-aci",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Family::ALL.into_iter().find(|f| f.tag() == s).ok_or_else(|| {
            let tags: Vec<&str> = Family::ALL.iter().map(|f| f.tag()).collect();
            format!("unknown family '{s}'; expected one of {}", tags.join(", "))
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessKind {
    /// `f` in `S` with `l f` in `I` and `f` not in `I`: multiplication by `l`
    /// from `deg f` is not injective.
    Primal,
    /// `F` in the inverse system of `I + (l)`: multiplication by `l` into
    /// `deg F` is not surjective.
    Dual,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub kind: WitnessKind,
    pub polynomial: Polynomial,
    /// Whether the polynomial came out of a nullspace computation rather than
    /// a closed formula.
    pub computed: bool,
}

impl Witness {
    fn primal(polynomial: Polynomial) -> Self {
        Self {
            kind: WitnessKind::Primal,
            polynomial,
            computed: false,
        }
    }

    fn dual(polynomial: Polynomial) -> Self {
        Self {
            kind: WitnessKind::Dual,
            polynomial,
            computed: false,
        }
    }

    pub fn degree(&self) -> u32 {
        self.polynomial.homogeneous_degree().unwrap_or(0)
    }

    /// Degree `i` of the map `A_i -> A_{i+1}` this witness obstructs.
    pub fn failure_degree(&self) -> Option<u32> {
        match self.kind {
            WitnessKind::Primal => Some(self.degree()),
            WitnessKind::Dual => self.degree().checked_sub(1),
        }
    }

    pub fn holds_for(&self, ideal: &MonomialIdeal) -> bool {
        match self.kind {
            WitnessKind::Primal => is_primal_kernel_element(ideal, &self.polynomial),
            WitnessKind::Dual => !self.polynomial.is_zero() && in_inverse_system(ideal, &self.polynomial, true),
        }
    }

    pub fn text(&self) -> String {
        let letter = match self.kind {
            WitnessKind::Primal => 'x',
            WitnessKind::Dual => 'X',
        };
        self.polynomial.to_text_with(letter)
    }
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Shape {
            kind: WitnessKind,
            degree: u32,
            computed: bool,
            polynomial: String,
        }
        Shape {
            kind: self.kind,
            degree: self.degree(),
            computed: self.computed,
            polynomial: self.text(),
        }
        .serialize(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ExpectedFailure {
    pub degree: u32,
    pub mode: Option<FailureMode>,
}

/// A constructed ideal with its provenance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConstructionRecipe {
    pub family: Family,
    pub n: u32,
    pub d: u32,
    pub mu: u64,
    /// Family-specific parameters such as block counts or exponents.
    pub extras: Vec<(String, u64)>,
    pub rationale: String,
    /// `None` means the failure degree has to be found by scanning.
    pub expected_failure: Option<ExpectedFailure>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub base: Option<Box<ConstructionRecipe>>,
    #[serde(serialize_with = "ideal_as_text")]
    pub ideal: MonomialIdeal,
}

fn ideal_as_text<S: Serializer>(ideal: &MonomialIdeal, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&ideal.to_text())
}

impl ConstructionRecipe {
    fn new(family: Family, ideal: MonomialIdeal, rationale: &str) -> Self {
        Self {
            family,
            n: ideal.nvars() as u32,
            d: ideal.degree(),
            mu: ideal.num_generators() as u64,
            extras: Vec::new(),
            rationale: rationale.to_string(),
            expected_failure: None,
            witnesses: Vec::new(),
            base: None,
            ideal,
        }
    }

    fn expect(mut self, degree: u32, mode: Option<FailureMode>) -> Self {
        self.expected_failure = Some(ExpectedFailure { degree, mode });
        self
    }

    fn with_witness(mut self, w: Witness) -> Self {
        self.witnesses.push(w);
        self
    }

    fn extra(mut self, key: &str, v: u64) -> Self {
        self.extras.push((key.to_string(), v));
        self
    }

    /// Chain of families from the innermost base outwards.
    pub fn lineage(&self) -> Vec<Family> {
        let mut chain = self.base.as_ref().map(|b| b.lineage()).unwrap_or_default();
        chain.push(self.family);
        chain
    }

    pub fn expected_failure_text(&self) -> String {
        match self.expected_failure {
            None => "verify by scan".to_string(),
            Some(ExpectedFailure { degree, mode: None }) => format!("expected failure degree {degree}"),
            Some(ExpectedFailure { degree, mode: Some(m) }) => format!("expected failure degree {degree} ({m})"),
        }
    }
}

fn out_of_range<T>(family: Family, reason: impl Into<String>) -> Result<T> {
    Err(ConstructionError::OutOfRange {
        family,
        reason: reason.into(),
    })
}

fn x(n: u32, exps: &[(usize, u32)]) -> Monomial {
    let mut e = vec![0u32; n as usize];
    for &(i, k) in exps {
        e[i - 1] += k;
    }
    Monomial::new(e)
}

fn pure_powers(n: u32, d: u32) -> Vec<Monomial> {
    (1..=n as usize).map(|i| x(n, &[(i, d)])).collect()
}

fn ideal(n: u32, d: u32, extra: impl IntoIterator<Item = Monomial>) -> Result<MonomialIdeal> {
    Ok(MonomialIdeal::new(n as usize, pure_powers(n, d).into_iter().chain(extra))?)
}

/// `X_i - X_j`, 1-based.
fn dx(n: u32, i: usize, j: usize) -> Polynomial {
    Polynomial::difference(n as usize, i - 1, j - 1)
}

/// `prod_{i<j} (X_i - X_j)` over the given 1-based variables.
pub fn vandermonde(n: u32, vars: &[usize]) -> Polynomial {
    let mut v = Polynomial::one(n as usize);
    for (k, &i) in vars.iter().enumerate() {
        for &j in &vars[k + 1..] {
            v = v.mul(&dx(n, i, j));
        }
    }
    v
}

/// `sum_{k<d} (-1)^k y1^(d-1-k) y2^k`, the quotient `(y1^d + (-1)^(d-1) y2^d) / (y1 + y2)`.
pub fn alternating_sum(n: u32, y1: usize, y2: usize, d: u32) -> Polynomial {
    let terms = (0..d).map(|k| {
        let c = if k % 2 == 0 { BigRational::one() } else { -BigRational::one() };
        (x(n, &[(y1, d - 1 - k), (y2, k)]), c)
    });
    Polynomial::from_terms(n as usize, terms)
}

fn check_nd(family: Family, n: u32, d: u32) -> Result<()> {
    if n < 3 || d < 2 {
        return out_of_range(family, format!("needs n >= 3 and d >= 2, got ({n},{d})"));
    }
    Ok(())
}

/// `(x_i^d, x_i x_n^(d-1))`, except for the two small cases where that ideal
/// has the WLP.
pub fn mm_injectivity_ideal(n: u32, d: u32) -> Result<ConstructionRecipe> {
    let fam = Family::InjectivityBase;
    check_nd(fam, n, d)?;
    match (n, d) {
        (3, 2) => Err(BoundsError::WlpForced.into()),
        (3, 3) => Ok(ConstructionRecipe::new(fam, ideal(3, 3, [x(3, &[(1, 1), (2, 1), (3, 1)])])?, "Togliatti system")
            .expect(2, Some(FailureMode::Injectivity))
            .with_witness(Witness::dual(vandermonde(3, &[1, 2, 3])))),
        (4, 2) => {
            let i = ideal(4, 2, [x(4, &[(1, 1), (2, 1)]), x(4, &[(3, 1), (4, 1)])])?;
            let f = Polynomial::parse(4, "x1+x2-x3-x4").expect("literal");
            Ok(ConstructionRecipe::new(fam, i, "l (x1+x2-x3-x4) = (x1+x2)^2 - (x3+x4)^2 lies in I")
                .expect(1, Some(FailureMode::Injectivity))
                .with_witness(Witness::primal(f)))
        }
        _ => {
            let nn = n as usize;
            let i = ideal(n, d, (1..nn).map(|k| x(n, &[(k, 1), (nn, d - 1)])))?;
            let f = Polynomial::monomial(nn, x(n, &[(nn, d - 1)]));
            Ok(ConstructionRecipe::new(fam, i, "l x_n^(d-1) lies in I while HF(d-1) < HF(d)")
                .expect(d - 1, Some(FailureMode::Injectivity))
                .with_witness(Witness::primal(f)))
        }
    }
}

/// The base injectivity ideal plus the canonically smallest missing monomials,
/// up to `mu` generators. Any ideal containing the base with at most
/// `Delta(n,d)` generators keeps the same kernel element.
pub fn mm_augmented_ideal(n: u32, d: u32, mu: u64) -> Result<ConstructionRecipe> {
    let fam = Family::InjectivityAugmented;
    let nu = bounds::nu(n, d)?;
    let top = delta(n, d);
    if mu < nu || mu > top {
        return out_of_range(fam, format!("mu = {mu} outside [{nu}, {top}] for ({n},{d})"));
    }
    let base = mm_injectivity_ideal(n, d)?;
    let missing = (mu - base.mu) as usize;
    let mut candidates = enumerate_monomials(n as usize, d);
    candidates.retain(|m| !base.ideal.has_generator(m));
    let extra: Vec<Monomial> = candidates.into_iter().take(missing).collect();
    let i = base.ideal.with_generators(extra)?;
    let mut r = ConstructionRecipe::new(fam, i, "contains the injectivity base ideal and has at most Delta(n,d) generators")
        .extra("added", missing as u64);
    r.expected_failure = base.expected_failure;
    r.witnesses = base.witnesses.clone();
    r.base = Some(Box::new(base));
    Ok(r)
}

/// Dual polynomial whose annihilator defines the surjectivity family.
pub fn annihilator_witness(n: u32, d: u32) -> Result<Polynomial> {
    let fam = Family::SurjectivityAnnihilator;
    check_nd(fam, n, d)?;
    match n {
        3 if d == 2 => Err(BoundsError::WlpForced.into()),
        3 => Ok(dx(3, 1, 2).mul(&dx(3, 1, 3)).mul(&dx(3, 2, 3).pow(d - 2))),
        _ => Ok(dx(n, 1, 2).mul(&dx(n, 3, 4).pow(d - 1))),
    }
}

/// Every degree-`d` monomial `m` with `m o f = 0`.
pub fn ab_surjectivity_ideal(n: u32, d: u32) -> Result<ConstructionRecipe> {
    let f = annihilator_witness(n, d)?;
    let gens = enumerate_monomials(n as usize, d).into_iter().filter(|m| f.differentiate(m).is_zero());
    let i = MonomialIdeal::new(n as usize, gens)?;
    Ok(ConstructionRecipe::new(
        Family::SurjectivityAnnihilator,
        i,
        "f lies in the inverse system of I + (l) in degree d while HF(d-1) > HF(d)",
    )
    .expect(d - 1, Some(FailureMode::Surjectivity))
    .with_witness(Witness::dual(f)))
}

/// Drop the canonically largest mixed generators of the annihilator ideal
/// until `mu` remain; the dual witness survives.
pub fn ab_subset_ideal(n: u32, d: u32, mu: u64) -> Result<ConstructionRecipe> {
    let fam = Family::SurjectivitySubset;
    let full = ab_surjectivity_ideal(n, d)?;
    let lo = delta(n, d);
    if mu < lo || mu > full.mu {
        return out_of_range(fam, format!("mu = {mu} outside [{lo}, {}] for ({n},{d})", full.mu));
    }
    let drop = (full.mu - mu) as usize;
    let mut mixed: Vec<Monomial> = full.ideal.mixed_generators().cloned().collect();
    mixed.sort();
    let keep = mixed.len() - drop;
    let gens = pure_powers(n, d).into_iter().chain(mixed.into_iter().take(keep));
    let i = MonomialIdeal::new(n as usize, gens)?;
    let mut r = ConstructionRecipe::new(fam, i, "generators form a subset of the annihilator family with at least Delta(n,d) of them")
        .extra("dropped", drop as u64);
    r.expected_failure = full.expected_failure;
    r.witnesses = full.witnesses.clone();
    r.base = Some(Box::new(full));
    Ok(r)
}

/// Ideal of `S'/I (x) S''/J`: union of generators with `J`'s variables shifted
/// past `I`'s.
pub fn tensor_ideal(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<MonomialIdeal> {
    if i.degree() != j.degree() {
        return Err(ConstructionError::MixedDegrees(i.degree(), j.degree()));
    }
    let n = i.nvars() + j.nvars();
    let gens = i.generators().iter().map(|g| g.embedded(n, 0)).chain(j.generators().iter().map(|g| g.embedded(n, i.nvars())));
    Ok(MonomialIdeal::new(n, gens)?)
}

/// Tensor with `k[y1,y2]/(y1^d, y2^d)`. A failure in degree `i` moves to
/// `i + d - 1`; witnesses become `F (Y1-Y2)^(d-1)` and
/// `f (y1^d + (-1)^(d-1) y2^d)/(y1+y2)`.
pub fn extend_by_ci_square(base: ConstructionRecipe) -> Result<ConstructionRecipe> {
    let d = base.d;
    let n = base.n + 2;
    let ci = MonomialIdeal::complete_intersection(2, d);
    let i = tensor_ideal(&base.ideal, &ci)?;
    let (y1, y2) = (n as usize - 1, n as usize);
    let dual_factor = dx(n, y1, y2).pow(d - 1);
    let primal_factor = alternating_sum(n, y1, y2, d);
    let witnesses = base
        .witnesses
        .iter()
        .map(|w| {
            let p = w.polynomial.embedded(n as usize, 0);
            let polynomial = match w.kind {
                WitnessKind::Primal => p.mul(&primal_factor),
                WitnessKind::Dual => p.mul(&dual_factor),
            };
            Witness { polynomial, ..w.clone() }
        })
        .collect();
    let lifts = base.extras.iter().find(|(k, _)| k == "lifts").map_or(0, |e| e.1);
    let mut r = ConstructionRecipe::new(Family::CiSquareLift, i, "tensor with k[y1,y2]/(y1^d,y2^d), whose isolated peak sits in degree d-1")
        .extra("lifts", lifts + 1);
    r.expected_failure = base.expected_failure.map(|e| ExpectedFailure {
        degree: e.degree + d - 1,
        mode: None,
    });
    r.witnesses = witnesses;
    r.base = Some(Box::new(base));
    Ok(r)
}

fn lift_times(mut r: ConstructionRecipe, k: u32) -> Result<ConstructionRecipe> {
    for _ in 0..k {
        r = extend_by_ci_square(r)?;
    }
    Ok(r)
}

/// `(x1^d..x4^d, x1^3 x2^(d-3))`, `d >= 5`.
pub fn four_var_aci(d: u32) -> Result<ConstructionRecipe> {
    let fam = Family::FourVarAci;
    if d < 5 {
        return out_of_range(fam, format!("needs d >= 5, got {d}"));
    }
    let i = ideal(4, d, [x(4, &[(1, 3), (2, d - 3)])])?;
    let f = dx(4, 1, 2).pow(d - 1).mul(&dx(4, 3, 4).pow(d - 1));
    Ok(ConstructionRecipe::new(fam, i, "(X1-X2)^(d-1)(X3-X4)^(d-1) is killed by l and by I; HF(2d-3) - HF(2d-2) = 2d-9 > 0")
        .expect(2 * d - 3, Some(FailureMode::Surjectivity))
        .with_witness(Witness::dual(f)))
}

/// `(x1^3..x6^3, x1 x2 x3)`: the Togliatti system tensored with the cubic
/// complete intersection in three variables.
pub fn togliatti_ci() -> Result<ConstructionRecipe> {
    let t = mm_injectivity_ideal(3, 3)?.ideal;
    let i = tensor_ideal(&t, &MonomialIdeal::complete_intersection(3, 3))?;
    Ok(ConstructionRecipe::new(Family::TogliattiCi, i, "Togliatti failure in degree 2 shifted by the isolated peak in degree 3").expect(5, None))
}

/// `(x1^n..xn^n, x1...xn)`; fails by surjectivity in degree `C(n,2) - 1`.
pub fn mmn_product_ideal(n: u32) -> Result<ConstructionRecipe> {
    let fam = Family::ProductAci;
    if n < 3 {
        return out_of_range(fam, format!("needs n >= 3, got {n}"));
    }
    let all: Vec<(usize, u32)> = (1..=n as usize).map(|i| (i, 1)).collect();
    let i = ideal(n, n, [x(n, &all)])?;
    let vars: Vec<usize> = (1..=n as usize).collect();
    let degree = binomial(n, 2) - 1;
    Ok(ConstructionRecipe::new(fam, i, "the Vandermonde determinant is killed by l, by every x_i^n and by x1...xn")
        .expect(degree, Some(FailureMode::Surjectivity))
        .with_witness(Witness::dual(vandermonde(n, &vars))))
}

/// `(x1^4..x5^4, x1 x2 x3 x4)`, fails by injectivity in degree 6 with five
/// independent dual witnesses of degree 7.
pub fn five_var_quartic_aci() -> Result<ConstructionRecipe> {
    let i = ideal(5, 4, [x(5, &[(1, 1), (2, 1), (3, 1), (4, 1)])])?;
    let mut r = ConstructionRecipe::new(
        Family::FiveVarQuarticAci,
        i,
        "HF(6) = 120 < HF(7) = 124 but the inverse system of I + (l) has dimension at least 5 in degree 7",
    )
    .expect(6, Some(FailureMode::Injectivity));
    for w in quartic_aci_witnesses() {
        r = r.with_witness(Witness::dual(w));
    }
    Ok(r)
}

const QUARTIC_F: &str = "(X4-X5)^2 (X2-X3) (X1-X3) (X1-X2) ((X5-X3)(X4-X2) + (X5-X2)(X4-X1) + (X5-X1)(X4-X3))";
const QUARTIC_H1: &str = "(X2-X5)(X1-X5)((X4-X5)^2(3X1+3X2-4X4-2X5) + (X3-X4)(X3+2X4-3X5)(X1+X2-2X4))";
const QUARTIC_H2: &str = "(X4-X5)(X3-X5)(2(2(X2-X5)^2 + (X1-X2)(X1+X2-2X5))(X3-X5) \
     + (X4-X5)(2(X2-X5)(2X2-3X3+X5) + (X1-X2)(2X1+2X2-3X3-X5)))";

/// `f`, `(14)f`, `(24)f`, `g`, `(23)g` for the quartic five-variable ACI.
pub fn quartic_aci_witnesses() -> Vec<Polynomial> {
    use crate::monomial::Permutation;
    let f = Polynomial::parse(5, QUARTIC_F).expect("transcribed f parses");
    let h1 = Polynomial::parse(5, QUARTIC_H1).expect("transcribed h1 parses");
    let h2 = Polynomial::parse(5, QUARTIC_H2).expect("transcribed h2 parses");
    let g = dx(5, 1, 2).mul(&dx(5, 3, 4)).mul(&h1.sub(&h2));
    let t = |i, j| Permutation::transposition(5, i, j);
    vec![f.clone(), f.permute_vars(&t(0, 3)), f.permute_vars(&t(1, 3)), g.clone(), g.permute_vars(&t(1, 2))]
}

/// Monomials occurring in exactly one of the quartic witnesses, in order.
pub fn quartic_aci_certificates() -> Vec<Monomial> {
    ["x1^2*x2^3*x5^2", "x1*x3*x4^2*x5^3", "x1^2*x4^3*x5^2", "x1^2*x3^2*x5^3", "x1^2*x2^2*x5^3"]
        .iter()
        .map(|t| MonomialIdeal::parse_in(t, Some(5)).expect("literal").generators()[0].clone())
        .collect()
}

fn three_var_half_ideal(d: u32) -> Result<MonomialIdeal> {
    ideal(3, d, [x(3, &[(1, d.div_ceil(2)), (2, d / 2)])])
}

/// `(x1^d..x5^d, x1^ceil(d/2) x2^floor(d/2))`, `d >= 5`, failing in degree
/// `floor((5d-5)/2) - 1`.
pub fn five_var_aci(d: u32) -> Result<ConstructionRecipe> {
    let fam = Family::FiveVarAci;
    if d < 5 {
        return out_of_range(fam, format!("needs d >= 5, got {d}"));
    }
    let i = ideal(5, d, [x(5, &[(1, d.div_ceil(2)), (2, d / 2)])])?;
    let t = (5 * d - 5) / 2 - 1;
    let mut r = ConstructionRecipe::new(fam, i, "kernel of the three-variable factor times the kernel of x4+x5 on k[x4,x5]/(x4^d,x5^d)")
        .expect(t, None);
    if d == 6 {
        let g = dx(5, 4, 5)
            .pow(2)
            .mul(&dx(5, 3, 5).pow(2))
            .mul(&dx(5, 3, 4).pow(2))
            .mul(&dx(5, 1, 2).pow(4));
        for (a, b, c, e) in [(3, 5, 1, 4), (3, 5, 2, 4), (4, 5, 1, 3), (4, 5, 2, 3)] {
            r = r.with_witness(Witness::dual(dx(5, a, b).mul(&dx(5, c, e)).mul(&g)));
        }
        return Ok(r);
    }
    // the three-variable quotient drops from degree s-1 to s, so x1+x2+x3
    // has a kernel in degree s-1
    let small = three_var_half_ideal(d)?;
    let s = (3 * d - 3) / 2;
    if let Some(g) = primal_kernel_basis(&small, s - 1).into_iter().next() {
        let f = g.embedded(5, 0).mul(&alternating_sum(5, 4, 5, d));
        r = r.with_witness(Witness {
            kind: WitnessKind::Primal,
            polynomial: f,
            computed: true,
        });
    }
    Ok(r)
}

fn aci_from_base(fam: Family, lifted: ConstructionRecipe, m: u32, degree: u32, mode: Option<FailureMode>) -> Result<ConstructionRecipe> {
    let mut r = ConstructionRecipe::new(fam, lifted.ideal.clone(), "small almost complete intersection lifted by complete-intersection squares")
        .expect(degree, mode)
        .extra("m", m as u64);
    r.witnesses = lifted.witnesses.clone();
    r.base = Some(Box::new(lifted));
    Ok(r)
}

/// Almost complete intersection for even `n = 2m`.
pub fn even_aci_ideal(n: u32, d: u32) -> Result<ConstructionRecipe> {
    let fam = Family::EvenAci;
    if !n.is_multiple_of(2) || n < 4 || d < 3 || (n, d) == (4, 3) {
        return out_of_range(fam, format!("needs even n >= 4, d >= 4, or even n >= 6, d = 3; got ({n},{d})"));
    }
    let m = n / 2;
    let (base, base_n) = match d {
        3 => (togliatti_ci()?, 6),
        4 => (mmn_product_ideal(4)?, 4),
        _ => (four_var_aci(d)?, 4),
    };
    let mode = if n == 4 && d >= 4 { Some(FailureMode::Surjectivity) } else { None };
    aci_from_base(fam, lift_times(base, (n - base_n) / 2)?, m, m * (d - 1) - 1, mode)
}

/// Almost complete intersection for odd `n = 2m + 1`.
pub fn odd_aci_ideal(n: u32, d: u32) -> Result<ConstructionRecipe> {
    let fam = Family::OddAci;
    if n.is_multiple_of(2) || n < 3 || d < 3 || (n == 3 && d != 3) {
        return out_of_range(fam, format!("needs odd n >= 5 and d >= 3, or d = 3 and n >= 3; got ({n},{d})"));
    }
    let m = n / 2;
    let (base, base_n) = match d {
        3 => (mm_injectivity_ideal(3, 3)?, 3),
        4 => (five_var_quartic_aci()?, 5),
        _ => (five_var_aci(d)?, 5),
    };
    let degree = match d {
        3 => 2 * m,
        4 => 3 * m,
        _ => n * (d - 1) / 2 - 1,
    };
    let mode = if (n, d) == (5, 4) { Some(FailureMode::Injectivity) } else { None };
    aci_from_base(fam, lift_times(base, (n - base_n) / 2)?, m, degree, mode)
}

/// `(x1^d, x2^d, x3^d, x1^a x2^b x3^c)` with `d = 6k+3`, `4k+2 > a >= b >= c`
/// and two of the exponents equal; defaults to `a = b = c = 2k+1`.
pub fn gln_633_ideal(d: u32, abc: Option<(u32, u32, u32)>) -> Result<ConstructionRecipe> {
    let fam = Family::ThreeVarAci6k3;
    if d % 6 != 3 {
        return out_of_range(fam, format!("needs d = 6k+3, got {d}"));
    }
    let k = d / 6;
    let (a, b, c) = abc.unwrap_or((2 * k + 1, 2 * k + 1, 2 * k + 1));
    if a + b + c != d || !(4 * k + 2 > a && a >= b && b >= c) || !(a == b || b == c) {
        return out_of_range(fam, format!("(a,b,c) = ({a},{b},{c}) must satisfy a+b+c = {d}, {} > a >= b >= c, two equal", 4 * k + 2));
    }
    let i = ideal(3, d, [x(3, &[(1, a), (2, b), (3, c)])])?;
    let mut r = ConstructionRecipe::new(fam, i, "monomial almost complete intersection in three variables with d = 3 mod 6")
        .extra("a", a as u64)
        .extra("b", b as u64)
        .extra("c", c as u64);
    if d == 3 {
        r = r.expect(2, None).with_witness(Witness::dual(vandermonde(3, &[1, 2, 3])));
    }
    Ok(r)
}

/// Tensor of `a` copies of `k[x,y,z]/(x,y,z)^2`, `b` of `k[x,y]/(x,y)^2` and
/// `n - 3a - 2b` of `k[x]/(x^2)`.
pub fn quadratic_blocks_ideal(n: u32, a: u32, b: u32) -> Result<ConstructionRecipe> {
    let fam = Family::QuadraticBlocks;
    if 3 * a + 2 * b > n {
        return out_of_range(fam, format!("blocks 3*{a} + 2*{b} exceed n = {n}"));
    }
    let c = n - 3 * a - 2 * b;
    let mut gens = Vec::new();
    let mut start = 1usize;
    for size in std::iter::repeat_n(3, a as usize).chain(std::iter::repeat_n(2, b as usize)).chain(std::iter::repeat_n(1, c as usize)) {
        for i in start..start + size {
            for j in i..start + size {
                gens.push(x(n, &[(i, 1), (j, 1)]));
            }
        }
        start += size;
    }
    let i = MonomialIdeal::new(n as usize, gens)?;
    Ok(ConstructionRecipe::new(fam, i, "tensor of algebras k[V]/V^2; fails unless at most one block (or two with an odd block count) has size > 1")
        .extra("a", a as u64)
        .extra("b", b as u64)
        .extra("c", c as u64))
}

/// Whether a tensor of `k[V_i]/V_i^2` with the given block sizes fails the
/// WLP.
pub fn blocks_fail(a: u32, b: u32, c: u32) -> bool {
    let big = a + b;
    let blocks = a + b + c;
    big >= 3 || (big == 2 && blocks.is_multiple_of(2))
}

/// Quadratic block ideal with `mu = n + 3a + b` generators, taking the
/// smallest `a` that gives a failing block pattern.
pub fn mns_quadratic_ideal(n: u32, mu: u64) -> Result<ConstructionRecipe> {
    let fam = Family::QuadraticBlocks;
    let excess = mu.saturating_sub(n as u64);
    for a in 0..=(n / 3) {
        let Some(b) = excess.checked_sub(3 * a as u64) else { break };
        let b = b as u32;
        if 3 * a + 2 * b > n {
            continue;
        }
        let c = n - 3 * a - 2 * b;
        if blocks_fail(a, b, c) {
            return quadratic_blocks_ideal(n, a, b);
        }
    }
    out_of_range(fam, format!("no failing block pattern with {mu} generators in {n} variables"))
}

/// `(x1^2..x7^2, x1x7, x2x7, x3x7, x4x7)`.
pub fn seven_var_quadratic_special() -> Result<ConstructionRecipe> {
    let i = ideal(7, 2, (1..=4).map(|k| x(7, &[(k, 1), (7, 1)])))?;
    Ok(ConstructionRecipe::new(Family::SevenVarQuadraticSpecial, i, "checked directly; fills the gap between the two block patterns for n = 7"))
}

/// `(x_i^d, x1^(d-1) x_j for 1 < j < n)`, failing in degree `2d-2`.
pub fn corner_ideal(n: u32, d: u32) -> Result<ConstructionRecipe> {
    let fam = Family::Corner2n2;
    if !((n >= 5 && d >= 4) || (n >= 6 && d >= 3) || (n >= 7 && d >= 2)) {
        return out_of_range(fam, format!("needs n >= 5, d >= 4 or n >= 6, d >= 3 or n >= 7, d >= 2; got ({n},{d})"));
    }
    let nn = n as usize;
    let i = ideal(n, d, (2..nn).map(|j| x(n, &[(1, d - 1), (j, 1)])))?;
    let mut r = ConstructionRecipe::new(fam, i, "x1^(d-1) xn^(d-1) is killed by l and a dual element blocks surjectivity in the same degree")
        .expect(2 * d - 2, None)
        .with_witness(Witness::primal(Polynomial::monomial(nn, x(n, &[(1, d - 1), (nn, d - 1)]))));
    if n == 5 && d >= 4 {
        let f = dx(n, 1, 2).mul(&dx(n, 1, 3)).mul(&dx(n, 2, 3).pow(d - 2)).mul(&dx(n, 4, 5).pow(d - 1));
        r = r.with_witness(Witness::dual(f));
    }
    if n >= 6 && d >= 3 {
        r = r.with_witness(Witness::dual(dx(n, 1, 6).mul(&dx(n, 2, 3).pow(d - 1)).mul(&dx(n, 4, 5).pow(d - 1))));
    }
    if n >= 7 {
        r = r.with_witness(Witness::dual(dx(n, 2, 3).mul(&dx(n, 4, 5).pow(d - 1)).mul(&dx(n, 6, 7).pow(d - 1))));
    }
    Ok(r)
}

/// `sum_{i<=d-2} (-1)^(d-2-i) (i+1) a^i b^(d-2-i)`.
fn paired_h(d: u32, a: usize, b: usize) -> Polynomial {
    let terms = (0..=d - 2).map(|i| {
        let sign = if (d - 2 - i).is_multiple_of(2) { 1 } else { -1 };
        (x(4, &[(a, i), (b, d - 2 - i)]), BigRational::from_integer((sign * (i as i64 + 1)).into()))
    });
    Polynomial::from_terms(4, terms)
}

/// `(x1^d..x4^d, x1^(d-1) x2, x3^(d-1) x4)`, failing both ways in degree
/// `2d-3`.
pub fn four_var_paired(d: u32) -> Result<ConstructionRecipe> {
    let fam = Family::FourVarPaired;
    if d < 2 {
        return out_of_range(fam, format!("needs d >= 2, got {d}"));
    }
    let i = ideal(4, d, [x(4, &[(1, d - 1), (2, 1)]), x(4, &[(3, d - 1), (4, 1)])])?;
    let primal = Polynomial::parse(4, "x1+x2-x3-x4").expect("literal").mul(&paired_h(d, 1, 2)).mul(&paired_h(d, 3, 4));
    let dual = dx(4, 1, 2).pow(d - 1).mul(&dx(4, 3, 4).pow(d - 1));
    Ok(ConstructionRecipe::new(fam, i, "(x1+x2-x3-x4) h1 h2 is killed by l; (X1-X2)^(d-1)(X3-X4)^(d-1) blocks surjectivity")
        .expect(2 * d - 3, None)
        .with_witness(Witness::primal(primal))
        .with_witness(Witness::dual(dual)))
}

/// `(x1^3..x5^3, x1^2 x2, x1 x2^2)`, with `x3 x4 x5` added when `augmented`.
pub fn five_var_cubic(augmented: bool) -> Result<ConstructionRecipe> {
    let mut extra = vec![x(5, &[(1, 2), (2, 1)]), x(5, &[(1, 1), (2, 2)])];
    if augmented {
        extra.push(x(5, &[(3, 1), (4, 1), (5, 1)]));
    }
    let i = ideal(5, 3, extra)?;
    let dual = dx(5, 3, 4).mul(&dx(5, 3, 5)).mul(&dx(5, 4, 5)).mul(&dx(5, 1, 2).pow(2));
    let primal = Polynomial::parse(5, "(x4^2 - x4 x5 + x5^2)((x1+x2)^2 - (x1+x2) x3 + x3^2)").expect("literal");
    Ok(ConstructionRecipe::new(Family::FiveVarCubic, i, "explicit kernel elements on both sides in degree 4")
        .expect(4, None)
        .extra("augmented", augmented as u64)
        .with_witness(Witness::primal(primal))
        .with_witness(Witness::dual(dual)))
}

/// Direct access to a named family. `d` and `mu` are ignored where the
/// family fixes them; `mu` selects the variant for `five-var-cubic`.
pub fn family_ideal(family: Family, n: u32, d: u32, mu: Option<u64>) -> Result<ConstructionRecipe> {
    let fixed = |want_n: u32, want_d: u32| -> Result<()> {
        if (n, d) != (want_n, want_d) {
            return out_of_range(family, format!("defined only for (n,d) = ({want_n},{want_d})"));
        }
        Ok(())
    };
    let needs_mu = || mu.ok_or_else(|| ConstructionError::OutOfRange { family, reason: "needs mu".to_string() });
    match family {
        Family::InjectivityBase => mm_injectivity_ideal(n, d),
        Family::InjectivityAugmented => mm_augmented_ideal(n, d, needs_mu()?),
        Family::SurjectivityAnnihilator => ab_surjectivity_ideal(n, d),
        Family::SurjectivitySubset => ab_subset_ideal(n, d, needs_mu()?),
        Family::CiSquareLift => {
            if n < 5 {
                return out_of_range(family, "the lifted ideal needs n >= 5");
            }
            extend_by_ci_square(construct_failing_ideal(n - 2, d, needs_mu()? - 2)?)
        }
        Family::EvenAci => even_aci_ideal(n, d),
        Family::OddAci => odd_aci_ideal(n, d),
        Family::ThreeVarAci6k3 => {
            if n != 3 {
                return out_of_range(family, "defined only for n = 3");
            }
            gln_633_ideal(d, None)
        }
        Family::QuadraticBlocks => {
            if d != 2 {
                return out_of_range(family, "defined only for d = 2");
            }
            mns_quadratic_ideal(n, needs_mu()?)
        }
        Family::Corner2n2 => corner_ideal(n, d),
        Family::FourVarPaired => {
            if n != 4 {
                return out_of_range(family, "defined only for n = 4");
            }
            four_var_paired(d)
        }
        Family::FiveVarCubic => {
            fixed(5, 3)?;
            match mu {
                None | Some(7) => five_var_cubic(false),
                Some(8) => five_var_cubic(true),
                Some(m) => out_of_range(family, format!("mu must be 7 or 8, got {m}")),
            }
        }
        Family::FourVarAci => {
            if n != 4 {
                return out_of_range(family, "defined only for n = 4");
            }
            four_var_aci(d)
        }
        Family::TogliattiCi => {
            fixed(6, 3)?;
            togliatti_ci()
        }
        Family::FiveVarAci => {
            if n != 5 {
                return out_of_range(family, "defined only for n = 5");
            }
            five_var_aci(d)
        }
        Family::FiveVarQuarticAci => {
            fixed(5, 4)?;
            five_var_quartic_aci()
        }
        Family::SevenVarQuadraticSpecial => {
            fixed(7, 2)?;
            seven_var_quadratic_special()
        }
        Family::ProductAci => {
            if n != d {
                return out_of_range(family, "needs d = n");
            }
            mmn_product_ideal(n)
        }
    }
}

/// A failing ideal with exactly `mu` generators of degree `d` in `n`
/// variables, for every `mu` in `Sigma(n,d)`.
pub fn construct_failing_ideal(n: u32, d: u32, mu: u64) -> Result<ConstructionRecipe> {
    let sigma = bounds::sigma(n, d)?;
    if !sigma.contains(mu) {
        return Err(ConstructionError::OutsideSigma {
            n,
            d,
            mu,
            sigma: sigma.to_string(),
        });
    }
    let top = delta(n, d);
    let r = if n == 3 {
        if mu == 4 {
            gln_633_ideal(d, None)?
        } else if mu <= top {
            mm_augmented_ideal(3, d, mu)?
        } else {
            ab_subset_ideal(3, d, mu)?
        }
    } else if mu > top {
        ab_subset_ideal(n, d, mu)?
    } else if d == 2 {
        quadratic_side(n, mu)?
    } else if mu == n as u64 + 1 {
        if n.is_multiple_of(2) {
            even_aci_ideal(n, d)?
        } else {
            odd_aci_ideal(n, d)?
        }
    } else {
        injectivity_side(n, d, mu)?
    };
    debug_assert_eq!(r.mu, mu);
    Ok(r)
}

/// `mu` in `[n+2, Delta(n,d)]`, `n >= 4`, `d >= 3`.
fn injectivity_side(n: u32, d: u32, mu: u64) -> Result<ConstructionRecipe> {
    let n64 = n as u64;
    if n >= 6 && mu >= n64 && mu - 2 <= delta(n - 2, d) {
        return extend_by_ci_square(injectivity_side(n - 2, d, mu - 2)?);
    }
    match (n, d, mu) {
        (4, _, 6) => four_var_paired(d),
        (5, 3, 7) => five_var_cubic(false),
        (5, 3, 8) => five_var_cubic(true),
        (5, _, 8) => corner_ideal(5, d),
        (5, _, 7) => extend_by_ci_square(mm_injectivity_ideal(3, d)?),
        _ => mm_augmented_ideal(n, d, mu),
    }
}

/// `mu` in `Omega_n`, `d = 2`.
fn quadratic_side(n: u32, mu: u64) -> Result<ConstructionRecipe> {
    let n64 = n as u64;
    if n.is_multiple_of(2) {
        return if mu >= 2 * n64 - 1 { mm_augmented_ideal(n, 2, mu) } else { mns_quadratic_ideal(n, mu) };
    }
    match (n, mu) {
        (5, _) => mm_augmented_ideal(5, 2, mu),
        (7, 11) => seven_var_quadratic_special(),
        (7, 10) | (7, 12) => mns_quadratic_ideal(7, mu),
        (7, _) => mm_augmented_ideal(7, 2, mu),
        _ if mu > n64 && mu - 2 <= delta(n - 2, 2) => extend_by_ci_square(quadratic_side(n - 2, mu - 2)?),
        _ => mm_augmented_ideal(n, 2, mu),
    }
}
