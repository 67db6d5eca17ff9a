//! Structure of A₍₂₎ = A(1) ⊗ A(1).
//!
//! The swap x1 ↔ x2 splits A₍₂₎ into symmetric and antisymmetric parts. Each
//! contains a canonical copy of A(1) (resp. A(1)/k) spanned by
//! `x1^i ± x2^i`; the quotients are the two top levels, whose explicit
//! composition series are spun from the lowest-weight vectors `v_i` in
//! `(top)_i ∩ ker e_{-1}`.
//!
//! Stages run in order: [`TensorDecomposition::s2_split`],
//! [`TensorDecomposition::canonical_submodules`],
//! [`TensorDecomposition::build_chains`]; the verification functions in
//! [`checks`] and [`lemmas`] read the finished pipeline.

pub mod checks;
pub mod lemmas;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ff_linalg::{kernel, FpMatrix, FpScalar, PrimeField, Subspace};
use crate::gmodules::{
    identify_simple, is_module_isomorphism, natural_module, simple_module, tensor_square_natural,
    GradedGModule, SimpleLabel, Subquotient,
};
use crate::module_structure::{composition_series, lowest_weight_vectors, spin};

pub use checks::{
    grothendieck_checks, verify_main_theorem, weight_table, ChainVerification,
    GrothendieckReport, MainTheoremReport, WeightRow, WeightTable,
};

/// Which half of the S₂ split a top level comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Symmetric,
    Antisymmetric,
}

impl Parity {
    /// Degrees carrying a chain generator: `2, 4, …, p-1` or `3, 5, …, p`.
    pub fn generator_degrees(self, p: u64) -> Vec<i64> {
        let p = p as i64;
        match self {
            Parity::Symmetric => (2..p).step_by(2).collect(),
            Parity::Antisymmetric => (3..=p).step_by(2).collect(),
        }
    }

    /// Degrees at which the kernel-dimension statement is made.
    pub fn kernel_degrees(self, p: u64) -> std::ops::RangeInclusive<i64> {
        match self {
            Parity::Symmetric => 2..=p as i64,
            Parity::Antisymmetric => 3..=p as i64,
        }
    }

    pub fn top_name(self) -> &'static str {
        match self {
            Parity::Symmetric => "AsPlus",
            Parity::Antisymmetric => "AaPlus",
        }
    }
}

/// A top level `A_s⁺` or `A_a⁺` with the data needed to read its vectors as
/// polynomials.
#[derive(Debug, Clone)]
pub struct TopLevel {
    pub parity: Parity,
    pub module: GradedGModule,
    /// Row `j` is a polynomial in A₍₂₎ representing basis vector `j`.
    pub lift: FpMatrix,
    /// The canonical submodule divided out, in A₍₂₎ coordinates.
    pub denominator: Subspace,
}

impl TopLevel {
    /// A polynomial (A₍₂₎ coordinates) representing `v`.
    pub fn lift_vector(&self, v: &[FpScalar]) -> Vec<FpScalar> {
        self.lift.transpose().mul_vec(v)
    }

    /// Whether `v` is the class of the polynomial `poly`.
    pub fn represents(&self, v: &[FpScalar], poly: &[FpScalar]) -> Result<bool> {
        let f = self.module.field();
        let diff: Vec<FpScalar> = self
            .lift_vector(v)
            .iter()
            .zip(poly)
            .map(|(&a, &b)| f.sub(a, b))
            .collect();
        self.denominator.contains(&diff)
    }

    /// Image in the top level of a space of polynomials from the numerator.
    pub fn project(&self, polys: &Subspace) -> Result<Subspace> {
        let rows = polys
            .basis_vectors()
            .map(|v| {
                self.solve_lift(v)?.ok_or_else(|| {
                    Error::Check("polynomial lies outside the numerator".into())
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Subspace::span(self.module.field(), self.module.dim(), &rows))
    }

    /// Coordinates `c` with `Σ c_j lift_j ≡ poly` modulo the denominator.
    pub fn solve_lift(&self, poly: &[FpScalar]) -> Result<Option<Vec<FpScalar>>> {
        let f = self.module.field();
        let k = self.module.dim();
        // Columns: lift rows then denominator basis; solve M^T x = poly.
        let system = self.lift.vstack(self.denominator.basis()).transpose();
        let n = system.cols();
        let mut aug = FpMatrix::zeros(f, system.rows(), n + 1);
        for r in 0..system.rows() {
            for c in 0..n {
                aug.set(r, c, system.get(r, c));
            }
            aug.set(r, n, poly[r]);
        }
        let red = aug.rref();
        if red.pivots.contains(&n) {
            return Ok(None);
        }
        let mut x = vec![0; n];
        for (row, &pc) in red.pivots.iter().enumerate() {
            x[pc] = red.matrix.get(row, n);
        }
        x.truncate(k);
        Ok(Some(x))
    }
}

/// One term `top[i] = u(g) · v_i` of an explicit chain.
#[derive(Debug, Clone)]
pub struct ChainTerm {
    pub degree: i64,
    /// `v_i` in top-level coordinates, first nonzero coordinate 1.
    pub generator: Vec<FpScalar>,
    pub submodule: Subspace,
}

#[derive(Debug, Clone)]
pub struct CanonicalSubmodules {
    /// `span{x1^i + x2^i}` in A₍₂₎ coordinates.
    pub sym_prime: Subspace,
    /// `span{x1^i - x2^i}` in A₍₂₎ coordinates.
    pub alt_prime: Subspace,
    pub sym_module: Subquotient,
    pub alt_module: Subquotient,
    pub sym_top: TopLevel,
    pub alt_top: TopLevel,
}

impl CanonicalSubmodules {
    pub fn top(&self, parity: Parity) -> &TopLevel {
        match parity {
            Parity::Symmetric => &self.sym_top,
            Parity::Antisymmetric => &self.alt_top,
        }
    }
}

/// An explicit chain for one top level together with the structural facts
/// observed while building it.
#[derive(Debug, Clone)]
pub struct ParityChain {
    pub terms: Vec<ChainTerm>,
    /// `(i, dim((top)_i ∩ ker e_{-1}))` over the stated degree range.
    pub kernel_dims: Vec<(i64, usize)>,
    /// `(i, v_{i+2} ∈ top[i])` for consecutive generators.
    pub inclusions: Vec<(i64, bool)>,
    /// Whether the first generator spins the whole top level.
    pub first_generates: bool,
}

impl ParityChain {
    pub fn kernel_dims_match(&self, parity: Parity, p: u64) -> bool {
        let generators = parity.generator_degrees(p);
        self.kernel_dims
            .iter()
            .all(|&(i, d)| d == usize::from(generators.contains(&i)))
    }

    pub fn is_chain(&self) -> bool {
        self.first_generates && self.inclusions.iter().all(|&(_, ok)| ok)
    }
}

#[derive(Debug, Clone)]
pub struct Chains {
    pub sym: ParityChain,
    pub alt: ParityChain,
}

impl Chains {
    pub fn get(&self, parity: Parity) -> &ParityChain {
        match parity {
            Parity::Symmetric => &self.sym,
            Parity::Antisymmetric => &self.alt,
        }
    }

    pub fn terms(&self, parity: Parity) -> &[ChainTerm] {
        &self.get(parity).terms
    }

    pub fn kernel_dims(&self, parity: Parity) -> &[(i64, usize)] {
        &self.get(parity).kernel_dims
    }
}

#[derive(Debug, Clone)]
pub struct TensorDecomposition {
    pub p: u64,
    pub a2: GradedGModule,
    /// Permutation matrix of x1 ↔ x2 on monomials.
    pub swap: FpMatrix,
    pub sym: Subspace,
    pub alt: Subspace,
    pub canonical: Option<CanonicalSubmodules>,
    pub chains: Option<Chains>,
}

fn monomial_index(p: u64, a: u64, b: u64) -> usize {
    (a * p + b) as usize
}

/// The polynomial `Σ c · x1^a x2^b` as an A₍₂₎ coordinate vector.
pub fn polynomial(p: u64, terms: &[(i64, u64, u64)]) -> Vec<FpScalar> {
    let f = PrimeField::new(p).expect("valid prime");
    let mut v = vec![0; (p * p) as usize];
    for &(c, a, b) in terms {
        let i = monomial_index(p, a, b);
        v[i] = f.add(v[i], f.from_i64(c));
    }
    v
}

impl TensorDecomposition {
    /// Splits A₍₂₎ into the ±1 eigenspaces of the swap and checks that both
    /// are submodules complementing each other.
    pub fn s2_split(p: u64) -> Result<Self> {
        let a2 = tensor_square_natural(p)?;
        let f = a2.field();
        let n = a2.dim();
        let mut swap = FpMatrix::zeros(f, n, n);
        for a in 0..p {
            for b in 0..p {
                swap.set(monomial_index(p, b, a), monomial_index(p, a, b), 1);
            }
        }
        for i in a2.algebra().indices() {
            if swap.mul(a2.rho(i)) != a2.rho(i).mul(&swap) {
                return Err(Error::Check(format!("swap does not commute with e_{i}")));
            }
        }
        let id = FpMatrix::identity(f, n);
        let sym = kernel(&swap.sub(&id));
        let alt = kernel(&swap.add(&id));
        let pu = p as usize;
        if sym.dim() != pu * (pu + 1) / 2 || alt.dim() != pu * (pu - 1) / 2 {
            return Err(Error::Check(format!(
                "swap eigenspaces have dimensions {} and {}",
                sym.dim(),
                alt.dim()
            )));
        }
        if !sym.sum(&alt)?.is_full() || !sym.intersect(&alt)?.is_zero() {
            return Err(Error::Check("A_s + A_a is not a direct sum decomposition".into()));
        }
        for (name, s) in [("A_s", &sym), ("A_a", &alt)] {
            if !a2.is_invariant(s)? {
                return Err(Error::Check(format!("{name} is not a submodule")));
            }
        }
        Ok(Self {
            p,
            a2,
            swap,
            sym,
            alt,
            canonical: None,
            chains: None,
        })
    }

    /// Runs every construction stage.
    pub fn build(p: u64) -> Result<Self> {
        let mut d = Self::s2_split(p)?;
        d.canonical_submodules()?;
        d.build_chains()?;
        Ok(d)
    }

    pub fn field(&self) -> PrimeField {
        self.a2.field()
    }

    pub fn canonical(&self) -> Result<&CanonicalSubmodules> {
        self.canonical
            .as_ref()
            .ok_or(Error::StageMissing("canonical_submodules"))
    }

    pub fn chains(&self) -> Result<&Chains> {
        self.chains.as_ref().ok_or(Error::StageMissing("build_chains"))
    }

    /// Builds `A_s' ⊆ A_s`, `A_a' ⊆ A_a` and the top levels, checking
    /// `A_s' ≅ A(1) ≅ Z(p-1)` and `A_a' ≅ A(1)/k ≅ L(p-1)`.
    pub fn canonical_submodules(&mut self) -> Result<&CanonicalSubmodules> {
        let p = self.p;
        let f = self.field();
        let n = self.a2.dim();

        let sym_gens: Vec<Vec<FpScalar>> =
            (0..p).map(|i| polynomial(p, &[(1, i, 0), (1, 0, i)])).collect();
        let alt_gens: Vec<Vec<FpScalar>> =
            (1..p).map(|i| polynomial(p, &[(1, i, 0), (-1, 0, i)])).collect();
        let sym_prime = Subspace::span(f, n, &sym_gens);
        let alt_prime = Subspace::span(f, n, &alt_gens);
        if !sym_prime.is_subspace_of(&self.sym)? || !alt_prime.is_subspace_of(&self.alt)? {
            return Err(Error::Check("canonical spans leave the swap eigenspaces".into()));
        }
        for (name, s) in [("A_s'", &sym_prime), ("A_a'", &alt_prime)] {
            if !self.a2.is_invariant(s)? {
                return Err(Error::Check(format!("{name} is not a submodule")));
            }
        }

        // A_s' ≅ A(1) via x^i ↦ x1^i + x2^i.
        let sym_prime_module = self.a2.restrict(&sym_prime)?.module;
        let a1 = natural_module(p)?;
        let iso = coordinate_map(&sym_prime, &sym_gens)?;
        if !is_module_isomorphism(&a1, &sym_prime_module, &iso) {
            return Err(Error::Check("x^i ↦ x1^i + x2^i is not an isomorphism".into()));
        }
        let series = composition_series(&sym_prime_module)?;
        let expected = vec![
            SimpleLabel::from_lambda(p, p - 1)?,
            SimpleLabel::from_lambda(p, 0)?,
        ];
        if series.factors != expected {
            return Err(Error::Check(format!(
                "A_s' has factors {:?}, expected L(p-1) over L(0)",
                series.factors
            )));
        }

        // A_a' ≅ L(p-1) via the class of x^i ↦ x1^i - x2^i.
        let alt_prime_module = self.a2.restrict(&alt_prime)?.module;
        let (top_simple, top_label) = simple_module(p, p - 1)?;
        let iso = coordinate_map(&alt_prime, &alt_gens)?;
        if !is_module_isomorphism(&top_simple, &alt_prime_module, &iso) {
            return Err(Error::Check("x^i ↦ x1^i - x2^i is not an isomorphism".into()));
        }
        if identify_simple(&alt_prime_module)? != top_label {
            return Err(Error::Check("A_a' is not L(p-1)".into()));
        }

        let sym_module = self.a2.restrict(&self.sym)?;
        let alt_module = self.a2.restrict(&self.alt)?;
        let sym_top = top_level(Parity::Symmetric, &sym_module, &sym_prime)?;
        let alt_top = top_level(Parity::Antisymmetric, &alt_module, &alt_prime)?;
        let pu = p as usize;
        if sym_top.module.dim() != pu * (pu - 1) / 2 {
            return Err(Error::Check(format!(
                "dim A_s⁺ = {}, expected p(p-1)/2",
                sym_top.module.dim()
            )));
        }
        if alt_top.module.dim() != (pu - 1) * (pu - 2) / 2 {
            return Err(Error::Check(format!(
                "dim A_a⁺ = {}, expected (p-1)(p-2)/2",
                alt_top.module.dim()
            )));
        }

        self.canonical = Some(CanonicalSubmodules {
            sym_prime,
            alt_prime,
            sym_module,
            alt_module,
            sym_top,
            alt_top,
        });
        self.canonical()
    }

    /// Extracts the lowest-weight generators `v_i` and spins the chains.
    ///
    /// Fails only when some generator degree does not carry exactly one
    /// lowest-weight line. The kernel dimensions elsewhere, the inclusions
    /// `v_{i+2} ∈ top[i]` and whether `top[i_0]` is everything are recorded
    /// for the checks to read.
    pub fn build_chains(&mut self) -> Result<&Chains> {
        let p = self.p;
        let canonical = self.canonical()?;
        let mut built = Vec::new();
        for parity in [Parity::Symmetric, Parity::Antisymmetric] {
            let top = canonical.top(parity);
            let lw = lowest_weight_vectors(&top.module)?;
            let kernel_dims: Vec<(i64, usize)> = parity
                .kernel_degrees(p)
                .map(|i| (i, lw.degree_dim(i)))
                .collect();
            let mut terms = Vec::new();
            for i in parity.generator_degrees(p) {
                let line = lw.degree(i).filter(|s| s.dim() == 1).ok_or_else(|| {
                    Error::Check(format!(
                        "{}: dim((top)_{i} ∩ ker e_-1) = {}, expected 1",
                        parity.top_name(),
                        lw.degree_dim(i)
                    ))
                })?;
                let generator = line.basis().row(0).to_vec();
                let submodule = spin(&top.module, &[generator.clone()]);
                terms.push(ChainTerm {
                    degree: i,
                    generator,
                    submodule,
                });
            }
            let inclusions = terms
                .windows(2)
                .map(|w| Ok((w[0].degree, w[0].submodule.contains(&w[1].generator)?)))
                .collect::<Result<Vec<_>>>()?;
            built.push(ParityChain {
                first_generates: terms[0].submodule.is_full(),
                terms,
                kernel_dims,
                inclusions,
            });
        }
        let alt = built.pop().expect("two parities");
        let sym = built.pop().expect("two parities");
        self.chains = Some(Chains { sym, alt });
        self.chains()
    }
}

/// Matrix sending basis vector `j` of the source to the coordinates of
/// `images[j]` in the canonical basis of `target`.
fn coordinate_map(target: &Subspace, images: &[Vec<FpScalar>]) -> Result<FpMatrix> {
    let f = target.field();
    let mut t = FpMatrix::zeros(f, target.dim(), images.len());
    for (c, v) in images.iter().enumerate() {
        let coords = target
            .coordinates(v)?
            .ok_or_else(|| Error::Check("image outside target".into()))?;
        for (r, x) in coords.into_iter().enumerate() {
            t.set(r, c, x);
        }
    }
    Ok(t)
}

fn top_level(parity: Parity, half: &Subquotient, prime: &Subspace) -> Result<TopLevel> {
    let f = half.module.field();
    let local_rows: Vec<Vec<FpScalar>> = prime
        .basis_vectors()
        .map(|v| {
            half_coordinates(half, v)
                .and_then(|c| c.ok_or_else(|| Error::Check("canonical span leaves its half".into())))
        })
        .collect::<Result<_>>()?;
    let local = Subspace::span(f, half.module.dim(), &local_rows);
    let quotient = half.module.quotient(&local)?;
    let lift = quotient.basis.mul(&half.basis);
    Ok(TopLevel {
        parity,
        module: quotient.module,
        lift,
        denominator: prime.clone(),
    })
}

/// Coordinates of an ambient vector in the basis of a restriction.
fn half_coordinates(half: &Subquotient, v: &[FpScalar]) -> Result<Option<Vec<FpScalar>>> {
    let s = Subspace::row_space(&half.basis);
    debug_assert_eq!(s.basis(), &half.basis);
    s.coordinates(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn split_dimensions() {
        let d = TensorDecomposition::s2_split(5).unwrap();
        assert_eq!(d.sym.dim(), 15);
        assert_eq!(d.alt.dim(), 10);
        assert!(d.sym.contains(&polynomial(5, &[(1, 1, 1)])).unwrap());
        assert!(d.alt.contains(&polynomial(5, &[(1, 1, 0), (-1, 0, 1)])).unwrap());
    }

    #[test]
    fn stages_must_run_in_order() {
        let mut d = TensorDecomposition::s2_split(5).unwrap();
        assert_eq!(d.build_chains().err(), Some(Error::StageMissing("canonical_submodules")));
    }

    #[test]
    fn canonical_pieces() {
        let mut d = TensorDecomposition::s2_split(7).unwrap();
        let c = d.canonical_submodules().unwrap();
        assert_eq!(c.sym_top.module.dim(), 21);
        assert_eq!(c.alt_top.module.dim(), 15);
        assert!(c.sym_prime.contains(&polynomial(7, &[(1, 0, 0)])).unwrap());
        assert_eq!(c.sym_prime.dim(), 7);
        assert_eq!(c.alt_prime.dim(), 6);
    }

    #[test]
    fn first_generators_are_the_named_polynomials() {
        let p = 7;
        let d = TensorDecomposition::build(p).unwrap();
        let c = d.canonical().unwrap();
        let chains = d.chains().unwrap();
        let v2 = &chains.sym.terms[0];
        assert_eq!(v2.degree, 2);
        assert!(c.sym_top.represents(&v2.generator, &polynomial(p, &[(1, 1, 1)])).unwrap());
        let v3 = &chains.alt.terms[0];
        assert_eq!(v3.degree, 3);
        let target = polynomial(p, &[(1, 2, 1), (-1, 1, 2)]);
        let scaled: Vec<bool> = (1..p)
            .map(|s| {
                let t: Vec<u64> = target.iter().map(|&x| x * s % p).collect();
                c.alt_top.represents(&v3.generator, &t).unwrap()
            })
            .collect();
        assert!(scaled.contains(&true));
    }

    #[test]
    fn trivial_summand_splits_off_the_alternating_top() {
        let p = 7;
        let d = TensorDecomposition::build(p).unwrap();
        let chains = d.chains().unwrap();
        assert!(chains.sym.is_chain());
        assert_eq!(chains.alt.inclusions, vec![(3, true), (5, false)]);
        assert!(!chains.alt.first_generates);
        let top = &d.canonical().unwrap().alt_top;
        let last = chains.alt.terms.last().unwrap();
        assert_eq!(last.submodule.dim(), 1);
        let f = PrimeField::new(p).unwrap();
        let named = |s: u64| -> Vec<(i64, u64, u64)> {
            (1..p).map(|a| (f.mul(s, f.inv(a)) as i64, a, p - a)).collect()
        };
        assert!((1..p).any(|s| top.represents(&last.generator, &polynomial(p, &named(s))).unwrap()));
        let sum = chains.alt.terms[0].submodule.sum(&last.submodule).unwrap();
        assert!(sum.is_full());
    }

    #[test]
    fn solve_lift_inverts_lift() {
        let d = TensorDecomposition::build(5).unwrap();
        let top = &d.canonical().unwrap().sym_top;
        let v: Vec<u64> = (0..top.module.dim() as u64).map(|i| i % 5).collect();
        let poly = top.lift_vector(&v);
        assert_eq!(top.solve_lift(&poly).unwrap(), Some(v));
    }
}
