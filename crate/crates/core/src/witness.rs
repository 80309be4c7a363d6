//! Named dual-polynomial witnesses, each with the ideal family it belongs to
//! and the parameter grid it is checked on.

use thiserror::Error;

use crate::constructions::{
    annihilator_witness, ab_surjectivity_ideal, corner_ideal, five_var_aci, five_var_cubic, five_var_quartic_aci,
    four_var_aci, four_var_paired, mmn_product_ideal, tensor_ideal, vandermonde, ConstructionError, WitnessKind,
};
use crate::inverse::{in_inverse_system, Polynomial};
use crate::monomial::MonomialIdeal;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WitnessError {
    #[error("unknown witness family '{0}'")]
    UnknownFamily(String),
    #[error("({n},{d}) is outside the range of '{name}'")]
    OutOfRange { name: &'static str, n: u32, d: u32 },
    #[error(transparent)]
    Construction(#[from] ConstructionError),
}

/// An ideal together with dual polynomials claimed to lie in the inverse
/// system of `I + (l)`.
#[derive(Clone, Debug)]
pub struct WitnessInstance {
    pub ideal: MonomialIdeal,
    pub polynomials: Vec<Polynomial>,
}

impl WitnessInstance {
    /// Per-polynomial membership in the inverse system of `I + (l)`.
    pub fn check(&self) -> Vec<bool> {
        self.polynomials.iter().map(|f| !f.is_zero() && in_inverse_system(&self.ideal, f, true)).collect()
    }

    pub fn all_pass(&self) -> bool {
        self.check().into_iter().all(|b| b)
    }
}

pub struct CatalogEntry {
    pub name: &'static str,
    pub description: &'static str,
    in_range: fn(u32, u32) -> bool,
    build: fn(u32, u32) -> Result<WitnessInstance, WitnessError>,
}

/// Bounds of the checking grid.
pub const GRID_MAX_N: u32 = 7;
pub const GRID_MAX_D: u32 = 8;

impl CatalogEntry {
    pub fn accepts(&self, n: u32, d: u32) -> bool {
        (self.in_range)(n, d)
    }

    pub fn build(&self, n: u32, d: u32) -> Result<WitnessInstance, WitnessError> {
        if !self.accepts(n, d) {
            return Err(WitnessError::OutOfRange { name: self.name, n, d });
        }
        (self.build)(n, d)
    }

    /// Every in-range `(n, d)` with `n <= 7`, `d <= 8`.
    pub fn grid(&self) -> Vec<(u32, u32)> {
        (3..=GRID_MAX_N).flat_map(|n| (2..=GRID_MAX_D).map(move |d| (n, d))).filter(|&(n, d)| self.accepts(n, d)).collect()
    }
}

fn single(ideal: MonomialIdeal, f: Polynomial) -> WitnessInstance {
    WitnessInstance {
        ideal,
        polynomials: vec![f],
    }
}

fn duals_of(r: crate::constructions::ConstructionRecipe) -> WitnessInstance {
    WitnessInstance {
        polynomials: r.witnesses.iter().filter(|w| w.kind == WitnessKind::Dual).map(|w| w.polynomial.clone()).collect(),
        ideal: r.ideal,
    }
}

fn dx(n: u32, i: usize, j: usize) -> Polynomial {
    Polynomial::difference(n as usize, i - 1, j - 1)
}

pub fn dual_witness_catalog() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            name: "annihilator",
            description: "(X1-X2)(X1-X3)(X2-X3)^(d-2) for n = 3, (X1-X2)(X3-X4)^(d-1) for n >= 4",
            in_range: |n, d| n >= 3 && d >= 2 && (n, d) != (3, 2),
            build: |n, d| Ok(single(ab_surjectivity_ideal(n, d)?.ideal, annihilator_witness(n, d)?)),
        },
        CatalogEntry {
            name: "vandermonde",
            description: "prod_{i<j} (X_i - X_j) for (x1^n..xn^n, x1...xn)",
            in_range: |n, d| n >= 3 && d == n,
            build: |n, _| {
                let vars: Vec<usize> = (1..=n as usize).collect();
                Ok(single(mmn_product_ideal(n)?.ideal, vandermonde(n, &vars)))
            },
        },
        CatalogEntry {
            name: "ci-square-lift",
            description: "annihilator witness in n-2 variables times (Y1-Y2)^(d-1)",
            in_range: |n, d| n >= 5 && d >= 2 && (n, d) != (5, 2),
            build: |n, d| {
                let base = ab_surjectivity_ideal(n - 2, d)?.ideal;
                let ideal = tensor_ideal(&base, &MonomialIdeal::complete_intersection(2, d))?;
                let f = annihilator_witness(n - 2, d)?.embedded(n as usize, 0).mul(&dx(n, n as usize - 1, n as usize).pow(d - 1));
                Ok(single(ideal, f))
            },
        },
        CatalogEntry {
            name: "corner-five",
            description: "(X1-X2)(X1-X3)(X2-X3)^(d-2)(X4-X5)^(d-1), n = 5",
            in_range: |n, d| n == 5 && d >= 4,
            build: |n, d| {
                let f = dx(n, 1, 2).mul(&dx(n, 1, 3)).mul(&dx(n, 2, 3).pow(d - 2)).mul(&dx(n, 4, 5).pow(d - 1));
                Ok(single(corner_ideal(n, d)?.ideal, f))
            },
        },
        CatalogEntry {
            name: "corner-six",
            description: "(X1-X6)(X2-X3)^(d-1)(X4-X5)^(d-1), n >= 6",
            in_range: |n, d| n >= 6 && d >= 3,
            build: |n, d| {
                let f = dx(n, 1, 6).mul(&dx(n, 2, 3).pow(d - 1)).mul(&dx(n, 4, 5).pow(d - 1));
                Ok(single(corner_ideal(n, d)?.ideal, f))
            },
        },
        CatalogEntry {
            name: "corner-seven",
            description: "(X2-X3)(X4-X5)^(d-1)(X6-X7)^(d-1), n >= 7",
            in_range: |n, d| n >= 7 && d >= 2,
            build: |n, d| {
                let f = dx(n, 2, 3).mul(&dx(n, 4, 5).pow(d - 1)).mul(&dx(n, 6, 7).pow(d - 1));
                Ok(single(corner_ideal(n, d)?.ideal, f))
            },
        },
        CatalogEntry {
            name: "four-var-paired",
            description: "(X1-X2)^(d-1)(X3-X4)^(d-1) for (x1^d..x4^d, x1^(d-1)x2, x3^(d-1)x4)",
            in_range: |n, d| n == 4 && d >= 2,
            build: |_, d| Ok(duals_of(four_var_paired(d)?)),
        },
        CatalogEntry {
            name: "four-var-aci",
            description: "(X1-X2)^(d-1)(X3-X4)^(d-1) for (x1^d..x4^d, x1^3 x2^(d-3))",
            in_range: |n, d| n == 4 && d >= 5,
            build: |_, d| Ok(duals_of(four_var_aci(d)?)),
        },
        CatalogEntry {
            name: "five-var-cubic",
            description: "(X3-X4)(X3-X5)(X4-X5)(X1-X2)^2, with and without x3x4x5 in the ideal",
            in_range: |n, d| (n, d) == (5, 3),
            build: |_, _| {
                let plain = duals_of(five_var_cubic(false)?);
                let aug = five_var_cubic(true)?.ideal;
                // the same polynomial also survives the extra generator
                let mut inst = plain;
                inst.ideal = aug;
                Ok(inst)
            },
        },
        CatalogEntry {
            name: "five-var-sextic",
            description: "F_k G, k = 1..4, for (x1^6..x5^6, x1^3 x2^3)",
            in_range: |n, d| (n, d) == (5, 6),
            build: |_, d| Ok(duals_of(five_var_aci(d)?)),
        },
        CatalogEntry {
            name: "five-var-quartic",
            description: "f, (14)f, (24)f, g, (23)g for (x1^4..x5^4, x1x2x3x4)",
            in_range: |n, d| (n, d) == (5, 4),
            build: |_, _| Ok(duals_of(five_var_quartic_aci()?)),
        },
    ]
}

pub fn catalog_entry(name: &str) -> Result<CatalogEntry, WitnessError> {
    dual_witness_catalog().into_iter().find(|e| e.name == name).ok_or_else(|| WitnessError::UnknownFamily(name.to_string()))
}
