use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::ff_linalg::{kernel, FpMatrix, FpScalar, PrimeField, Subspace};
use crate::gmodules::GradedGModule;

use super::spin::spin_over;

/// Default cap on the dimension of a lowest-weight space whose projective
/// points are enumerated.
pub const DEFAULT_ENUMERATION_CAP: usize = 5;

/// Vectors killed by e_{-1}, split by degree and by e_0-weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowestWeightSpaces {
    /// Nonzero `ker e_{-1} ∩ M_d` per degree `d` (empty for ungraded modules).
    pub by_degree: Vec<(i64, Subspace)>,
    /// Nonzero `ker e_{-1} ∩ M_λ` per weight `λ`.
    pub by_weight: Vec<(FpScalar, Subspace)>,
}

impl LowestWeightSpaces {
    pub fn degree(&self, d: i64) -> Option<&Subspace> {
        self.by_degree.iter().find(|(k, _)| *k == d).map(|(_, s)| s)
    }

    pub fn degree_dim(&self, d: i64) -> usize {
        self.degree(d).map_or(0, Subspace::dim)
    }
}

pub fn lowest_weight_vectors(m: &GradedGModule) -> Result<LowestWeightSpaces> {
    let k = kernel(m.rho(-1));
    let mut by_degree = Vec::new();
    if m.degrees().is_some() {
        for d in m.degree_values()? {
            let s = k.intersect(&m.degree_component(d)?)?;
            if !s.is_zero() {
                by_degree.push((d, s));
            }
        }
    }
    let by_weight = weight_components(m.field(), &k, m.rho(0))?
        .into_iter()
        .map(|(w, vs)| (w, Subspace::span(m.field(), m.dim(), &vs)))
        .collect();
    Ok(LowestWeightSpaces {
        by_degree,
        by_weight,
    })
}

/// Splits an `h`-stable subspace `k` into eigenspaces of `h`.
///
/// Works in the coordinates of `k`, so only a `dim k` square eigenproblem is
/// solved per weight.
fn weight_components(
    field: PrimeField,
    k: &Subspace,
    h: &FpMatrix,
) -> Result<Vec<(FpScalar, Vec<Vec<FpScalar>>)>> {
    let r = k.dim();
    if r == 0 {
        return Ok(Vec::new());
    }
    let mut local = FpMatrix::zeros(field, r, r);
    for (c, v) in k.basis_vectors().enumerate() {
        let coords = k
            .coordinates(&h.mul_vec(v))?
            .ok_or_else(|| Error::ModuleInvariant("ker e_-1 is not e_0-stable".into()))?;
        for (row, x) in coords.into_iter().enumerate() {
            local.set(row, c, x);
        }
    }
    let id = FpMatrix::identity(field, r);
    let mut out = Vec::new();
    let mut total = 0;
    for lambda in field.elements() {
        let eig = kernel(&local.sub(&id.scale(lambda)));
        if eig.is_zero() {
            continue;
        }
        total += eig.dim();
        let vectors = eig
            .basis_vectors()
            .map(|c| k.combine(c))
            .collect::<Result<Vec<_>>>()?;
        out.push((lambda, vectors));
    }
    if total != r {
        return Err(Error::IncompleteWeightDecomposition {
            found: total,
            dim: r,
        });
    }
    Ok(out)
}

/// Normalised coefficient vectors of all points of P(F_p^d).
fn projective_points(field: PrimeField, d: usize) -> Vec<Vec<FpScalar>> {
    let p = field.p();
    let mut out = Vec::new();
    for lead in 0..d {
        let free = d - lead - 1;
        let count = p.pow(free as u32);
        for mut code in 0..count {
            let mut c = vec![0; d];
            c[lead] = 1;
            for slot in c.iter_mut().skip(lead + 1) {
                *slot = code % p;
                code /= p;
            }
            out.push(c);
        }
    }
    out
}

fn combine(field: PrimeField, n: usize, basis: &[Vec<FpScalar>], coeffs: &[FpScalar]) -> Vec<FpScalar> {
    let mut v = vec![0; n];
    for (b, &c) in basis.iter().zip(coeffs) {
        if c == 0 {
            continue;
        }
        for (o, &x) in v.iter_mut().zip(b) {
            if x != 0 {
                *o = field.mul_add(*o, c, x);
            }
        }
    }
    v
}

/// Submodules `S ⊋ base` with `S / base` simple, sorted by canonical basis.
///
/// Every nonzero submodule of `M / base` contains an e_0-weight vector killed
/// by e_{-1} (e_{-1} is nilpotent and e_0 semisimple). The candidates are all
/// lines in those weight spaces; the inclusion-minimal spins among them are
/// exactly the simple submodules. Spins exceeding `base + p` dimensions are
/// abandoned early, because simple restricted W(1)-modules have dimension at
/// most p.
pub fn minimal_submodules_over(
    m: &GradedGModule,
    base: &Subspace,
    cap: usize,
) -> Result<Vec<Subspace>> {
    let f = m.field();
    let n = m.dim();
    if base.dim() == n {
        return Ok(Vec::new());
    }
    let q = base.quotient_map();
    let reduced = |i: i64| q.projection.mul(&m.rho(i).select_columns(&q.complement));
    let lowering = reduced(-1);
    let weight = reduced(0);
    let k = kernel(&lowering);
    let components = weight_components(f, &k, &weight)?;

    let indices: Vec<i64> = m.algebra().indices().collect();
    let limit = base.dim() + m.p() as usize;
    let mut spins: BTreeSet<Subspace> = BTreeSet::new();
    for (_, vectors) in &components {
        let d = vectors.len();
        if d > cap {
            return Err(Error::EnumerationBudget { dim: d, cap });
        }
        for coeffs in projective_points(f, d) {
            let local = combine(f, q.complement.len(), vectors, &coeffs);
            let lifted = q.section.mul_vec(&local);
            if let Some(s) = spin_over(m, &indices, base, &[lifted], Some(limit)) {
                spins.insert(s);
            }
        }
    }

    let spins: Vec<Subspace> = spins.into_iter().collect();
    let mut minimal = Vec::new();
    for (a, s) in spins.iter().enumerate() {
        let mut is_min = true;
        for (b, t) in spins.iter().enumerate() {
            if a != b && t.dim() < s.dim() && t.is_subspace_of(s)? {
                is_min = false;
                break;
            }
        }
        if is_min {
            minimal.push(s.clone());
        }
    }
    Ok(minimal)
}

pub fn minimal_submodules(m: &GradedGModule) -> Result<Vec<Subspace>> {
    minimal_submodules_with_cap(m, DEFAULT_ENUMERATION_CAP)
}

pub fn minimal_submodules_with_cap(m: &GradedGModule, cap: usize) -> Result<Vec<Subspace>> {
    minimal_submodules_over(m, &Subspace::zero(m.field(), m.dim()), cap)
}

/// Sum of all minimal submodules.
pub fn socle(m: &GradedGModule) -> Result<Subspace> {
    let mut acc = Subspace::zero(m.field(), m.dim());
    for s in minimal_submodules(m)? {
        acc = acc.sum(&s)?;
    }
    Ok(acc)
}

pub fn is_simple(m: &GradedGModule) -> Result<bool> {
    if m.dim() == 0 {
        return Ok(false);
    }
    let mins = minimal_submodules(m)?;
    Ok(mins.len() == 1 && mins[0].is_full())
}

/// True when the socle is simple, which certifies indecomposability.
/// False means only that this certificate is unavailable.
pub fn is_indecomposable_via_socle(m: &GradedGModule) -> Result<bool> {
    Ok(m.dim() > 0 && minimal_submodules(m)?.len() == 1)
}
