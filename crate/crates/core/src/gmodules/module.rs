use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::ff_linalg::{FpMatrix, FpScalar, PrimeField, Subspace};
use crate::witt_algebra::{AxiomCheck, WittAlgebra};

/// A restricted W(1)-module given by its action matrices.
///
/// `action[i + 1]` is ρ(e_i) acting on column vectors: entry `(r, c)` is the
/// coefficient of basis vector `r` in `e_i · b_c`. Construction validates Lie
/// compatibility, restrictedness and, when degrees are present, that ρ(e_i)
/// shifts degree by exactly `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedGModule {
    algebra: WittAlgebra,
    dim: usize,
    action: Vec<FpMatrix>,
    degrees: Option<Vec<i64>>,
    basis_names: Option<Vec<String>>,
}

/// A subquotient `upper / lower` of a module, with the chosen basis of the
/// subquotient written in the parent's coordinates.
#[derive(Debug, Clone)]
pub struct Subquotient {
    pub module: GradedGModule,
    pub basis: FpMatrix,
}

impl GradedGModule {
    pub fn new(
        algebra: WittAlgebra,
        action: Vec<FpMatrix>,
        degrees: Option<Vec<i64>>,
        basis_names: Option<Vec<String>>,
    ) -> Result<Self> {
        let m = Self::from_parts(algebra, action, degrees, basis_names)?;
        if let Some(failed) = m.invariant_checks().into_iter().find(|c| !c.passed) {
            return Err(Error::ModuleInvariant(format!(
                "{} fails at {}",
                failed.name,
                failed.failures.join(", ")
            )));
        }
        Ok(m)
    }

    /// Shape checks only; the algebraic invariants are the caller's responsibility.
    pub(crate) fn from_parts(
        algebra: WittAlgebra,
        action: Vec<FpMatrix>,
        degrees: Option<Vec<i64>>,
        basis_names: Option<Vec<String>>,
    ) -> Result<Self> {
        if action.len() != algebra.dim() {
            return Err(Error::DimensionMismatch {
                expected: algebra.dim(),
                found: action.len(),
            });
        }
        let dim = action[0].rows();
        for m in &action {
            if m.shape() != (dim, dim) {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: m.cols().max(m.rows()),
                });
            }
            if m.field() != algebra.field() {
                return Err(Error::ModuleInvariant("field mismatch".into()));
            }
        }
        for len in [
            degrees.as_ref().map(Vec::len),
            basis_names.as_ref().map(Vec::len),
        ]
        .into_iter()
        .flatten()
        {
            if len != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: len,
                });
            }
        }
        Ok(Self {
            algebra,
            dim,
            action,
            degrees,
            basis_names,
        })
    }

    /// The zero module.
    pub fn zero(algebra: WittAlgebra) -> Self {
        let f = algebra.field();
        Self {
            algebra,
            dim: 0,
            action: (0..algebra.dim()).map(|_| FpMatrix::zeros(f, 0, 0)).collect(),
            degrees: Some(Vec::new()),
            basis_names: Some(Vec::new()),
        }
    }

    #[inline]
    pub fn algebra(&self) -> WittAlgebra {
        self.algebra
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.algebra.field()
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.algebra.p()
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// ρ(e_i); panics when `i` is outside `-1..=p-2`.
    pub fn rho(&self, i: i64) -> &FpMatrix {
        assert!(self.algebra.in_range(i), "e_{i} is not a basis element");
        &self.action[self.algebra.position(i)]
    }

    pub fn action(&self, i: i64) -> Result<&FpMatrix> {
        self.algebra.check_index(i)?;
        Ok(&self.action[self.algebra.position(i)])
    }

    pub fn apply(&self, i: i64, v: &[FpScalar]) -> Vec<FpScalar> {
        self.rho(i).mul_vec(v)
    }

    pub fn degrees(&self) -> Option<&[i64]> {
        self.degrees.as_deref()
    }

    pub fn basis_names(&self) -> Option<&[String]> {
        self.basis_names.as_deref()
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: names.len(),
            });
        }
        self.basis_names = Some(names);
        Ok(self)
    }

    pub fn degree_values(&self) -> Result<BTreeSet<i64>> {
        Ok(self
            .degrees
            .as_ref()
            .ok_or(Error::Ungraded)?
            .iter()
            .copied()
            .collect())
    }

    /// Span of the basis vectors of degree `d`.
    pub fn degree_component(&self, d: i64) -> Result<Subspace> {
        let degrees = self.degrees.as_ref().ok_or(Error::Ungraded)?;
        let coords: Vec<usize> = (0..self.dim).filter(|&c| degrees[c] == d).collect();
        Ok(Subspace::coordinate(self.field(), self.dim, &coords))
    }

    /// Degree of `v` if all its nonzero coordinates share one degree.
    /// The zero vector has no degree.
    pub fn homogeneous_degree(&self, v: &[FpScalar]) -> Result<Option<i64>> {
        let degrees = self.degrees.as_ref().ok_or(Error::Ungraded)?;
        let mut found = None;
        for (c, &x) in v.iter().enumerate() {
            if x == 0 {
                continue;
            }
            match found {
                None => found = Some(degrees[c]),
                Some(d) if d != degrees[c] => return Err(Error::NotHomogeneous),
                _ => {}
            }
        }
        Ok(found)
    }

    pub fn unit_vector(&self, c: usize) -> Vec<FpScalar> {
        let mut v = vec![0; self.dim];
        v[c] = 1;
        v
    }

    /// Human-readable linear combination of basis names.
    pub fn describe(&self, v: &[FpScalar]) -> String {
        let names: Vec<String> = match &self.basis_names {
            Some(n) => n.clone(),
            None => (0..self.dim).map(|c| format!("b{c}")).collect(),
        };
        format_combination(self.field(), v, &names)
    }

    pub fn is_invariant(&self, s: &Subspace) -> Result<bool> {
        Ok(self.first_escape(s)?.is_none())
    }

    fn first_escape(&self, s: &Subspace) -> Result<Option<i64>> {
        if s.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: s.ambient_dim(),
            });
        }
        for i in self.algebra.indices() {
            for v in s.basis_vectors() {
                if !s.contains(&self.apply(i, v))? {
                    return Ok(Some(i));
                }
            }
        }
        Ok(None)
    }

    pub fn invariant_checks(&self) -> Vec<AxiomCheck> {
        let g = self.algebra;
        let n = self.dim as u64;
        let mut checks = Vec::new();

        let mut failures = Vec::new();
        for i in g.indices() {
            for j in g.indices().filter(|&j| j > i) {
                let lhs = self.rho(i).commutator(self.rho(j));
                let t = g.bracket(i, j).expect("indices in range");
                let ok = match t.index {
                    Some(k) => lhs == self.rho(k).scale(t.coeff),
                    None => lhs.is_zero(),
                };
                if !ok {
                    failures.push(format!("[e_{i}, e_{j}]"));
                }
            }
        }
        let pairs = g.p() * (g.p() - 1) / 2;
        checks.push(AxiomCheck::new("lie_compatibility", pairs, failures));

        let mut failures = Vec::new();
        for i in g.indices() {
            let lhs = self.rho(i).pow(g.p());
            let t = g.pmap(i).expect("index in range");
            let ok = match t.index {
                Some(k) => lhs == self.rho(k).scale(t.coeff),
                None => lhs.is_zero(),
            };
            if !ok {
                failures.push(format!("e_{i}^p"));
            }
        }
        checks.push(AxiomCheck::new("restrictedness", g.p(), failures));

        if let Some(degrees) = &self.degrees {
            let mut failures = Vec::new();
            for i in g.indices() {
                let m = self.rho(i);
                for r in 0..self.dim {
                    for c in 0..self.dim {
                        if m.get(r, c) != 0 && degrees[r] != degrees[c] + i {
                            failures.push(format!("e_{i} entry ({r}, {c})"));
                        }
                    }
                }
            }
            checks.push(AxiomCheck::new("graded", g.p() * n * n, failures));
        }
        checks
    }

    /// `upper / lower` for invariant subspaces `lower ⊆ upper`.
    ///
    /// The basis is the RREF of `upper` reduced modulo `lower`; for
    /// `upper = everything` it consists of the standard basis vectors at the
    /// non-pivot coordinates of `lower`.
    pub fn subquotient(&self, upper: &Subspace, lower: &Subspace) -> Result<Subquotient> {
        if let Some(i) = self.first_escape(upper)? {
            return Err(Error::NotInvariant(i));
        }
        if let Some(i) = self.first_escape(lower)? {
            return Err(Error::NotInvariant(i));
        }
        if !lower.is_subspace_of(upper)? {
            return Err(Error::ModuleInvariant(
                "lower subspace is not contained in upper".into(),
            ));
        }
        let sq = self.subquotient_trusted(upper, lower)?;
        if let Some(failed) = sq.module.invariant_checks().into_iter().find(|c| !c.passed) {
            return Err(Error::ModuleInvariant(format!(
                "subquotient {} fails at {}",
                failed.name,
                failed.failures.join(", ")
            )));
        }
        Ok(sq)
    }

    /// Subquotient without invariance or axiom checks, for subspaces that are
    /// submodules by construction (spins).
    pub(crate) fn subquotient_trusted(
        &self,
        upper: &Subspace,
        lower: &Subspace,
    ) -> Result<Subquotient> {
        let f = self.field();
        let reduced: Vec<Vec<FpScalar>> = upper
            .basis_vectors()
            .map(|v| lower.reduce(v))
            .collect::<Result<_>>()?;
        let complement = Subspace::span(f, self.dim, &reduced);
        let k = complement.dim();

        let mut action = Vec::with_capacity(self.algebra.dim());
        for i in self.algebra.indices() {
            let mut m = FpMatrix::zeros(f, k, k);
            for (c, w) in complement.basis_vectors().enumerate() {
                let image = lower.reduce(&self.apply(i, w))?;
                for (r, &pc) in complement.pivots().iter().enumerate() {
                    m.set(r, c, image[pc]);
                }
            }
            action.push(m);
        }

        let degrees = match &self.degrees {
            Some(_) => complement
                .basis_vectors()
                .map(|w| self.homogeneous_degree(w))
                .collect::<Result<Vec<_>>>()
                .ok()
                .map(|ds| ds.into_iter().map(|d| d.expect("basis vectors are nonzero")).collect()),
            None => None,
        };
        let names = self
            .basis_names
            .as_ref()
            .map(|_| complement.basis_vectors().map(|w| self.describe(w)).collect());

        let module = Self::from_parts(self.algebra, action, degrees, names)?;
        Ok(Subquotient {
            module,
            basis: complement.basis().clone(),
        })
    }

    /// The submodule `s` with its own action in the canonical basis of `s`.
    pub fn restrict(&self, s: &Subspace) -> Result<Subquotient> {
        self.subquotient(s, &Subspace::zero(self.field(), self.dim))
    }

    /// Quotient by an invariant subspace, in the non-pivot coordinates of `s`.
    pub fn quotient(&self, s: &Subspace) -> Result<Subquotient> {
        self.subquotient(&Subspace::full(self.field(), self.dim), s)
    }
}

/// Formats `Σ c_i name_i` with signed coefficients.
pub fn format_combination(field: PrimeField, v: &[FpScalar], names: &[String]) -> String {
    let mut out = String::new();
    for (c, &x) in v.iter().enumerate() {
        if x == 0 {
            continue;
        }
        let s = field.to_signed(x);
        let (sign, mag) = if s < 0 { ("-", -s) } else { ("+", s) };
        if out.is_empty() {
            if sign == "-" {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        if mag != 1 {
            out.push_str(&format!("{mag}*"));
        }
        out.push_str(&names[c]);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Checks that `t` (dim b × dim a) is an invertible module map `a → b`.
pub fn is_module_isomorphism(a: &GradedGModule, b: &GradedGModule, t: &FpMatrix) -> bool {
    if a.dim() != b.dim() || t.shape() != (b.dim(), a.dim()) || t.rank() != a.dim() {
        return false;
    }
    a.algebra()
        .indices()
        .all(|i| t.mul(a.rho(i)) == b.rho(i).mul(t))
}
