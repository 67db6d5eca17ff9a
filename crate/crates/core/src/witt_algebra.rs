//! The restricted Witt algebra W(1) = Der(F_p[x]/(x^p)).
//!
//! Basis `e_i = x^{i+1} d/dx` for `-1 <= i <= p-2`, with
//! `[e_i, e_j] = (j - i) e_{i+j}` (zero when `i + j` leaves the range) and
//! p-map `e_0^[p] = e_0`, `e_i^[p] = 0` otherwise. Structure constants are
//! evaluated on demand.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ff_linalg::{FpMatrix, FpScalar, PrimeField};

/// A basis element written as `coeff * e_index`; `index == None` means zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Term {
    pub coeff: FpScalar,
    pub index: Option<i64>,
}

impl Term {
    pub const ZERO: Term = Term {
        coeff: 0,
        index: None,
    };

    pub fn is_zero(&self) -> bool {
        self.index.is_none()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WittAlgebra {
    field: PrimeField,
}

impl WittAlgebra {
    pub fn new(p: u64) -> Result<Self> {
        Ok(Self {
            field: PrimeField::new(p)?,
        })
    }

    pub fn from_field(field: PrimeField) -> Self {
        Self { field }
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.field.p()
    }

    pub fn dim(&self) -> usize {
        self.field.p() as usize
    }

    pub fn min_index(&self) -> i64 {
        -1
    }

    pub fn max_index(&self) -> i64 {
        self.p() as i64 - 2
    }

    /// `-1, 0, ..., p-2`.
    pub fn indices(&self) -> impl Iterator<Item = i64> {
        -1..=self.max_index()
    }

    /// Indices spanning b⁺ = g_0 ⊕ g_1 ⊕ ... ⊕ g_{p-2}.
    pub fn b_plus(&self) -> impl Iterator<Item = i64> {
        0..=self.max_index()
    }

    /// Indices spanning b⁻ = g_{-1} ⊕ g_0.
    pub fn b_minus(&self) -> impl Iterator<Item = i64> {
        -1..=0
    }

    pub fn in_range(&self, i: i64) -> bool {
        (-1..=self.max_index()).contains(&i)
    }

    pub fn check_index(&self, i: i64) -> Result<()> {
        if self.in_range(i) {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                max: self.max_index(),
            })
        }
    }

    /// Position of `e_i` in the ordered basis `e_{-1}, ..., e_{p-2}`.
    pub fn position(&self, i: i64) -> usize {
        debug_assert!(self.in_range(i));
        (i + 1) as usize
    }

    pub fn bracket(&self, i: i64, j: i64) -> Result<Term> {
        self.check_index(i)?;
        self.check_index(j)?;
        let k = i + j;
        let coeff = self.field.from_i64(j - i);
        if !self.in_range(k) || coeff == 0 {
            return Ok(Term::ZERO);
        }
        Ok(Term {
            coeff,
            index: Some(k),
        })
    }

    pub fn pmap(&self, i: i64) -> Result<Term> {
        self.check_index(i)?;
        Ok(if i == 0 {
            Term {
                coeff: 1,
                index: Some(0),
            }
        } else {
            Term::ZERO
        })
    }

    /// ad(e_i) in the basis `e_{-1}, ..., e_{p-2}` (columns are inputs).
    pub fn ad_matrix(&self, i: i64) -> Result<FpMatrix> {
        self.check_index(i)?;
        let mut m = FpMatrix::zeros(self.field, self.dim(), self.dim());
        for j in self.indices() {
            let t = self.bracket(i, j)?;
            if let Some(k) = t.index {
                m.set(self.position(k), self.position(j), t.coeff);
            }
        }
        Ok(m)
    }

    /// Image of a term under `rho`, as a matrix.
    pub fn term_matrix(&self, t: Term, rho: impl Fn(i64) -> FpMatrix, dim: usize) -> FpMatrix {
        match t.index {
            Some(k) => rho(k).scale(t.coeff),
            None => FpMatrix::zeros(self.field, dim, dim),
        }
    }

    pub fn verify_structure(&self) -> StructureReport {
        let mut checks = Vec::new();

        let mut failures = Vec::new();
        for i in self.indices() {
            for j in self.indices() {
                let a = self.bracket(i, j).unwrap();
                let b = self.bracket(j, i).unwrap();
                if a.index != b.index || self.field.add(a.coeff, b.coeff) != 0 {
                    failures.push(format!("[e_{i}, e_{j}]"));
                }
            }
        }
        checks.push(AxiomCheck::new("antisymmetry", self.p() * self.p(), failures));

        // Σ_cyclic [e_i, [e_j, e_k]] accumulated as a coefficient vector.
        let mut failures = Vec::new();
        let mut triples = 0;
        for i in self.indices() {
            for j in self.indices() {
                for k in self.indices() {
                    triples += 1;
                    let mut acc = vec![0; self.dim()];
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        let inner = self.bracket(b, c).unwrap();
                        if let Some(m) = inner.index {
                            let outer = self.bracket(a, m).unwrap();
                            if let Some(n) = outer.index {
                                let pos = self.position(n);
                                acc[pos] = self
                                    .field
                                    .mul_add(acc[pos], inner.coeff, outer.coeff);
                            }
                        }
                    }
                    if acc.iter().any(|&x| x != 0) {
                        failures.push(format!("(e_{i}, e_{j}, e_{k})"));
                    }
                }
            }
        }
        checks.push(AxiomCheck::new("jacobi", triples, failures));

        let mut failures = Vec::new();
        for i in self.indices() {
            let lhs = self.ad_matrix(i).unwrap().pow(self.p());
            let rhs = self.term_matrix(
                self.pmap(i).unwrap(),
                |k| self.ad_matrix(k).unwrap(),
                self.dim(),
            );
            if lhs != rhs {
                failures.push(format!("ad(e_{i})^p"));
            }
        }
        checks.push(AxiomCheck::new("restrictedness", self.p(), failures));

        StructureReport {
            p: self.p(),
            checks,
        }
    }
}

/// Outcome of one exhaustively checked axiom.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub name: String,
    pub cases: u64,
    pub passed: bool,
    pub failures: Vec<String>,
}

impl AxiomCheck {
    pub fn new(name: &str, cases: u64, mut failures: Vec<String>) -> Self {
        failures.truncate(10);
        Self {
            name: name.to_string(),
            cases,
            passed: failures.is_empty(),
            failures,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub p: u64,
    pub checks: Vec<AxiomCheck>,
}

impl StructureReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

pub fn verify_structure(p: u64) -> Result<StructureReport> {
    Ok(WittAlgebra::new(p)?.verify_structure())
}
