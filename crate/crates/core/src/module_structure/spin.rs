use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::ff_linalg::{EchelonBasis, FpScalar, Subspace};
use crate::gmodules::GradedGModule;

/// Smallest submodule containing `generators`.
pub fn spin(m: &GradedGModule, generators: &[Vec<FpScalar>]) -> Subspace {
    let base = Subspace::zero(m.field(), m.dim());
    let indices: Vec<i64> = m.algebra().indices().collect();
    spin_over(m, &indices, &base, generators, None).expect("no limit")
}

/// Closes `base + span(generators)` under ρ(e_i) for `i` in `indices`.
///
/// `base` must already be closed. Returns `None` as soon as the span grows
/// beyond `limit` dimensions.
pub(crate) fn spin_over(
    m: &GradedGModule,
    indices: &[i64],
    base: &Subspace,
    generators: &[Vec<FpScalar>],
    limit: Option<usize>,
) -> Option<Subspace> {
    let mut basis = EchelonBasis::from_subspace(base);
    let mut work: Vec<Vec<FpScalar>> = Vec::new();
    for g in generators {
        if basis.insert(g) {
            work.push(g.clone());
        }
    }
    while let Some(v) = work.pop() {
        if limit.is_some_and(|l| basis.dim() > l) {
            return None;
        }
        for &i in indices {
            let w = m.apply(i, &v);
            if basis.insert(&w) {
                work.push(w);
            }
        }
    }
    if limit.is_some_and(|l| basis.dim() > l) {
        return None;
    }
    Some(basis.into_subspace())
}

/// Dimension of `u(b⁺)_l · v` for every degree `i + l` reached, where `v`
/// is homogeneous of degree `i`.
///
/// Spinning `v` under e_0, ..., e_{p-2} keeps every vector homogeneous, so
/// the span is assembled degree by degree.
pub fn graded_bplus_spin_dims(
    m: &GradedGModule,
    v: &[FpScalar],
) -> Result<BTreeMap<i64, usize>> {
    Ok(graded_bplus_spin(m, v)?
        .into_iter()
        .map(|(d, s)| (d, s.dim()))
        .collect())
}

/// Degree components of `u(b⁺) · v`.
pub fn graded_bplus_spin(m: &GradedGModule, v: &[FpScalar]) -> Result<BTreeMap<i64, Subspace>> {
    if v.len() != m.dim() {
        return Err(Error::DimensionMismatch {
            expected: m.dim(),
            found: v.len(),
        });
    }
    let Some(start) = m.homogeneous_degree(v)? else {
        return Ok(BTreeMap::new());
    };
    let f = m.field();
    let n = m.dim();
    let mut pieces: BTreeMap<i64, EchelonBasis> = BTreeMap::new();
    let mut work = vec![(start, v.to_vec())];
    pieces.entry(start).or_insert_with(|| EchelonBasis::new(f, n)).insert(v);
    let indices: Vec<i64> = m.algebra().b_plus().collect();
    while let Some((d, w)) = work.pop() {
        for &i in &indices {
            let image = m.apply(i, &w);
            if image.iter().all(|&x| x == 0) {
                continue;
            }
            let target = d + i;
            if pieces
                .entry(target)
                .or_insert_with(|| EchelonBasis::new(f, n))
                .insert(&image)
            {
                work.push((target, image));
            }
        }
    }
    Ok(pieces
        .into_iter()
        .map(|(d, b)| (d, b.into_subspace()))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gmodules::{natural_module, simple_module, tensor_square_natural};

    #[test]
    fn spin_of_zero_is_zero() {
        let a = natural_module(5).unwrap();
        assert!(spin(&a, &[vec![0; 5]]).is_zero());
        assert!(spin(&a, &[]).is_zero());
    }

    #[test]
    fn constants_are_a_trivial_submodule() {
        let a2 = tensor_square_natural(5).unwrap();
        let s = spin(&a2, &[a2.unit_vector(0)]);
        assert_eq!(s.dim(), 1);
        assert!(s.contains(&a2.unit_vector(0)).unwrap());
    }

    #[test]
    fn spin_is_invariant_and_idempotent() {
        let a2 = tensor_square_natural(5).unwrap();
        let v: Vec<u64> = (0..25).map(|i| (i * i % 5) as u64).collect();
        let s = spin(&a2, &[v.clone()]);
        assert!(s.contains(&v).unwrap());
        assert!(a2.is_invariant(&s).unwrap());
        let gens: Vec<Vec<u64>> = s.basis_vectors().map(<[u64]>::to_vec).collect();
        assert_eq!(spin(&a2, &gens), s);
    }

    #[test]
    fn spin_limit_aborts() {
        let a = natural_module(7).unwrap();
        let top = a.unit_vector(6);
        let indices: Vec<i64> = a.algebra().indices().collect();
        let base = Subspace::zero(a.field(), 7);
        assert!(spin_over(&a, &indices, &base, &[top.clone()], Some(3)).is_none());
        assert_eq!(spin_over(&a, &indices, &base, &[top], Some(7)).unwrap().dim(), 7);
    }

    #[test]
    fn bplus_spin_of_natural_generator() {
        let (l, _) = simple_module(7, 3).unwrap();
        let dims = graded_bplus_spin_dims(&l, &l.unit_vector(0)).unwrap();
        assert_eq!(dims.values().sum::<usize>(), 7);
        assert!(dims.values().all(|&d| d == 1));
    }

    #[test]
    fn bplus_spin_rejects_inhomogeneous() {
        let a = natural_module(5).unwrap();
        assert_eq!(
            graded_bplus_spin_dims(&a, &[1, 1, 0, 0, 0]),
            Err(Error::NotHomogeneous)
        );
    }
}
