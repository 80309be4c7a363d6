//! Macaulay inverse systems under the differentiation action.
//!
//! `S = k[x1..xn]` acts on `R = k[X1..Xn]` by `x_j o F = dF/dX_j`. The inverse
//! system of a monomial ideal `I` is spanned by the dual monomials `X^a` with
//! `x^a` not in `I`, so `dim (I^-1)_i = HF(S/I, i)`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::linalg::{nullspace, SparseIntMatrix};
use crate::monomial::{quotient_basis, Monomial, MonomialQuotient, Permutation};
use crate::wlp::mult_map_matrix;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("variable index {index} outside 1..={nvars}")]
    Variable { index: usize, nvars: usize },
}

/// Polynomial with rational coefficients; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

/// Element of the dual ring `k[X1..Xn]`.
pub type DualPolynomial = Polynomial;

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        Self::from_terms(nvars, [(Monomial::one(nvars), c)])
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigRational::one())
    }

    /// The variable with 0-based index `i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        Self::monomial(nvars, Monomial::var(nvars, i))
    }

    pub fn monomial(nvars: usize, m: Monomial) -> Self {
        Self::from_terms(nvars, [(m, BigRational::one())])
    }

    /// `X_i - X_j` with 0-based indices.
    pub fn difference(nvars: usize, i: usize, j: usize) -> Self {
        Self::var(nvars, i).sub(&Self::var(nvars, j))
    }

    /// Sum of all variables.
    pub fn linear_form(nvars: usize) -> Self {
        (0..nvars).fold(Self::zero(nvars), |acc, i| acc.add(&Self::var(nvars, i)))
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, BigRational)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        debug_assert_eq!(m.nvars(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Common degree of all terms, `None` for zero or inhomogeneous input.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(Monomial::degree);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-BigRational::one())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.mul(b), x * y);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Relabel variables: `X_i` becomes `X_{perm(i)}`.
    pub fn permute_vars(&self, perm: &Permutation) -> Self {
        Self::from_terms(self.nvars, self.terms.iter().map(|(m, c)| (m.permuted(perm), c.clone())))
    }

    /// Same polynomial viewed in `nvars` variables, its own placed at
    /// `offset..`.
    pub fn embedded(&self, nvars: usize, offset: usize) -> Self {
        Self::from_terms(nvars, self.terms.iter().map(|(m, c)| (m.embedded(nvars, offset), c.clone())))
    }

    /// `m o F`: apply the differential operator `d^|m| / dX^m`.
    pub fn differentiate(&self, m: &Monomial) -> Self {
        let mut out = Self::zero(self.nvars);
        for (a, c) in &self.terms {
            if let Some(q) = a.div(m) {
                let mut factor = BigInt::one();
                for k in 0..self.nvars {
                    for t in 0..m.exp(k) {
                        factor *= a.exp(k) - t;
                    }
                }
                out.add_term(q, c * BigRational::from_integer(factor));
            }
        }
        out
    }

    /// `l o F` with `l = x1 + ... + xn`.
    pub fn apply_linear_form(&self) -> Self {
        (0..self.nvars).fold(Self::zero(self.nvars), |acc, j| acc.add(&self.differentiate(&Monomial::var(self.nvars, j))))
    }

    /// Drop every term lying in the ideal: the image in `S/I`.
    pub fn reduce_mod<Q: MonomialQuotient + ?Sized>(&self, ideal: &Q) -> Self {
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().filter(|(m, _)| !ideal.contains(m)).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    pub fn to_text_with(&self, letter: char) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        // highest monomials first reads more naturally
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mono = m.to_text_with(letter);
            if m.degree() == 0 {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{abs}*{mono}"));
            }
        }
        out
    }

    /// Parse an expression in `X1..Xn` (or `x1..xn`): sums, differences,
    /// products written with `*` or by juxtaposition, integer powers `^k`,
    /// parentheses and integer constants.
    pub fn parse(nvars: usize, text: &str) -> Result<Self, PolyError> {
        Expr::parse(text)?.expand(nvars)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text_with('X'))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text_with('X'))
    }
}

/// Unexpanded polynomial expression, kept so long products can be stored in
/// the factored shape they were written in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Var(usize),
    Const(BigInt),
    Sum(Vec<Expr>),
    Product(Vec<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    pub fn parse(text: &str) -> Result<Self, PolyError> {
        let mut p = ExprParser { bytes: text.as_bytes(), pos: 0 };
        let e = p.sum()?;
        p.ws();
        if p.pos != p.bytes.len() {
            return Err(p.err("unexpected trailing input"));
        }
        Ok(e)
    }

    /// Largest variable index used (1-based), 0 if none.
    pub fn max_var(&self) -> usize {
        match self {
            Expr::Var(i) => *i,
            Expr::Const(_) => 0,
            Expr::Sum(v) | Expr::Product(v) => v.iter().map(Expr::max_var).max().unwrap_or(0),
            Expr::Neg(e) | Expr::Pow(e, _) => e.max_var(),
        }
    }

    pub fn expand(&self, nvars: usize) -> Result<Polynomial, PolyError> {
        Ok(match self {
            Expr::Var(i) => {
                if *i == 0 || *i > nvars {
                    return Err(PolyError::Variable { index: *i, nvars });
                }
                Polynomial::var(nvars, i - 1)
            }
            Expr::Const(c) => Polynomial::constant(nvars, BigRational::from_integer(c.clone())),
            Expr::Sum(v) => {
                let mut acc = Polynomial::zero(nvars);
                for e in v {
                    acc = acc.add(&e.expand(nvars)?);
                }
                acc
            }
            Expr::Product(v) => {
                let mut acc = Polynomial::one(nvars);
                for e in v {
                    acc = acc.mul(&e.expand(nvars)?);
                }
                acc
            }
            Expr::Neg(e) => e.expand(nvars)?.neg(),
            Expr::Pow(e, k) => e.expand(nvars)?.pow(*k),
        })
    }
}

struct ExprParser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl ExprParser<'_> {
    fn err(&self, message: &str) -> PolyError {
        PolyError::Parse {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.bytes.get(self.pos).copied()
    }

    fn number(&mut self) -> Option<u64> {
        self.ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.bytes[start..self.pos]).ok()?.parse().ok()
    }

    fn sum(&mut self) -> Result<Expr, PolyError> {
        let mut parts = vec![self.product()?];
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.pos += 1;
                    parts.push(self.product()?);
                }
                b'-' => {
                    self.pos += 1;
                    parts.push(Expr::Neg(Box::new(self.product()?)));
                }
                _ => break,
            }
        }
        Ok(if parts.len() == 1 { parts.pop().unwrap() } else { Expr::Sum(parts) })
    }

    fn product(&mut self) -> Result<Expr, PolyError> {
        let mut parts = vec![self.factor()?];
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    parts.push(self.factor()?);
                }
                Some(c) if c == b'(' || c.is_ascii_digit() || c == b'X' || c == b'x' => parts.push(self.factor()?),
                _ => break,
            }
        }
        Ok(if parts.len() == 1 { parts.pop().unwrap() } else { Expr::Product(parts) })
    }

    fn factor(&mut self) -> Result<Expr, PolyError> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        let base = self.primary()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let k = self.number().ok_or_else(|| self.err("expected an exponent"))?;
            let k = u32::try_from(k).map_err(|_| self.err("exponent too large"))?;
            return Ok(Expr::Pow(Box::new(base), k));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Expr, PolyError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.sum()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(b'X') | Some(b'x') => {
                self.pos += 1;
                let i = self.number().ok_or_else(|| self.err("expected a variable index"))?;
                Ok(Expr::Var(i as usize))
            }
            Some(c) if c.is_ascii_digit() => {
                let v = self.number().ok_or_else(|| self.err("bad number"))?;
                Ok(Expr::Const(BigInt::from(v)))
            }
            _ => Err(self.err("expected a variable, number or '('")),
        }
    }
}

/// Whether `F` is annihilated by every generator of `I` (and by `l` when
/// `include_ell`). A monomial generator kills `F` exactly when it divides none
/// of `F`'s terms, since in characteristic zero distinct terms differentiate
/// to distinct nonzero terms.
pub fn in_inverse_system<Q: MonomialQuotient + ?Sized>(ideal: &Q, f: &DualPolynomial, include_ell: bool) -> bool {
    if f.terms().any(|(m, _)| ideal.contains(m)) {
        return false;
    }
    !include_ell || f.apply_linear_form().is_zero()
}

/// `l * f` lies in `I` while `f` does not: a nonzero kernel element of
/// multiplication by `l` on `S/I`.
pub fn is_primal_kernel_element<Q: MonomialQuotient + ?Sized>(ideal: &Q, f: &Polynomial) -> bool {
    let ell = Polynomial::linear_form(f.nvars());
    !f.reduce_mod(ideal).is_zero() && ell.mul(f).reduce_mod(ideal).is_zero()
}

/// Matrix of `o l : (I^-1)_j -> (I^-1)_{j-1}` in the dual monomial bases
/// (columns indexed by degree-`j` standard monomials, rows by degree `j-1`).
/// Entry `(b, a)` is the exponent `a_k` where `X^a = X^b X_k`.
pub fn differentiation_matrix<Q: MonomialQuotient + ?Sized>(ideal: &Q, j: u32) -> SparseIntMatrix {
    let source = quotient_basis(ideal, j);
    if j == 0 {
        return SparseIntMatrix::zeros(0, source.len());
    }
    let target = quotient_basis(ideal, j - 1);
    let index = target.index();
    let mut entries = Vec::new();
    for (c, a) in source.monomials.iter().enumerate() {
        for k in 0..a.nvars() {
            if let Some(b) = a.div_var(k) {
                if let Some(&r) = index.get(&b) {
                    entries.push((r, c, a.exp(k) as i64));
                }
            }
        }
    }
    SparseIntMatrix::new(target.len(), source.len(), entries).expect("well-formed differentiation matrix")
}

fn vector_to_polynomial(nvars: usize, basis: &[Monomial], v: &[BigRational]) -> Polynomial {
    // clear denominators so bases print with integer coefficients
    let lcm = v.iter().fold(BigInt::one(), |acc, x| num_integer::lcm(acc, x.denom().clone()));
    let scale = BigRational::from_integer(lcm);
    Polynomial::from_terms(nvars, basis.iter().cloned().zip(v.iter().map(|x| x * &scale)))
}

/// Basis of the kernel of `o l` on `(I^-1)_i`.
pub fn inverse_kernel_basis<Q: MonomialQuotient + ?Sized>(ideal: &Q, i: u32) -> Vec<DualPolynomial> {
    let basis = quotient_basis(ideal, i);
    let d = differentiation_matrix(ideal, i);
    nullspace(&d).iter().map(|v| vector_to_polynomial(ideal.nvars(), &basis.monomials, v)).collect()
}

/// Basis of the kernel of `x l : (S/I)_i -> (S/I)_{i+1}`, written on the
/// standard monomials.
pub fn primal_kernel_basis<Q: MonomialQuotient + ?Sized>(ideal: &Q, i: u32) -> Vec<Polynomial> {
    let basis = quotient_basis(ideal, i);
    let m = mult_map_matrix(ideal, i);
    nullspace(&m).iter().map(|v| vector_to_polynomial(ideal.nvars(), &basis.monomials, v)).collect()
}

/// Rank of a set of polynomials as vectors over the rationals.
pub fn polynomial_rank(polys: &[Polynomial]) -> usize {
    let mut monos: Vec<&Monomial> = polys.iter().flat_map(|p| p.terms.keys()).collect();
    monos.sort();
    monos.dedup();
    let index: std::collections::HashMap<&Monomial, usize> = monos.iter().enumerate().map(|(k, m)| (*m, k)).collect();
    // scale each row to integers; rank is unchanged
    let mut entries = Vec::new();
    for (r, p) in polys.iter().enumerate() {
        let lcm = p.terms.values().fold(BigInt::one(), |acc, x| num_integer::lcm(acc, x.denom().clone()));
        for (m, c) in &p.terms {
            let v = (c * BigRational::from_integer(lcm.clone())).to_integer();
            let v: i64 = v.try_into().expect("coefficient fits in i64");
            entries.push((r, index[m], v));
        }
    }
    let m = SparseIntMatrix::new(polys.len(), monos.len(), entries).expect("distinct positions");
    crate::linalg::rank_exact(&m)
}

/// Monomials whose coefficient is nonzero in exactly one of `polys`, reported
/// per polynomial; a monomial unique to each member certifies independence.
pub fn occurs_uniquely(polys: &[Polynomial], monomial: &Monomial) -> Vec<bool> {
    let hits: Vec<bool> = polys.iter().map(|p| !p.coefficient(monomial).is_zero()).collect();
    let count = hits.iter().filter(|&&h| h).count();
    hits.into_iter().map(|h| h && count == 1).collect()
}
