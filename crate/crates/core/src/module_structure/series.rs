use serde::Serialize;

use crate::error::{Error, Result};
use crate::ff_linalg::Subspace;
use crate::gmodules::{identify_simple, GradedGModule, SimpleLabel};

use super::minimal::{minimal_submodules_over, DEFAULT_ENUMERATION_CAP};

/// A composition series summarised by dimensions and factor labels.
///
/// `chain` runs from the whole module down to 0; `factors[k]` is the simple
/// quotient `chain[k] / chain[k + 1]`, so the list reads top to bottom.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompositionReport {
    pub p: u64,
    pub module_dim: usize,
    pub chain: Vec<usize>,
    pub factors: Vec<SimpleLabel>,
    /// Multiplicity of `L(λ)`, indexed by λ.
    pub grothendieck: Vec<usize>,
}

impl CompositionReport {
    /// Builds a report from factor labels listed top to bottom.
    pub fn from_factors(p: u64, factors: Vec<SimpleLabel>) -> Self {
        let module_dim = factors.iter().map(|f| f.dim).sum();
        let mut chain = vec![module_dim];
        let mut rest = module_dim;
        for f in &factors {
            rest -= f.dim;
            chain.push(rest);
        }
        let grothendieck = grothendieck_vector(p, &factors);
        Self {
            p,
            module_dim,
            chain,
            factors,
            grothendieck,
        }
    }

    /// Factor labels sorted by λ; equal for any two composition series.
    pub fn factor_multiset(&self) -> Vec<SimpleLabel> {
        let mut v = self.factors.clone();
        v.sort();
        v
    }

    /// Checks the chain/factor/multiplicity bookkeeping.
    pub fn is_consistent(&self) -> bool {
        let steps_ok = self.chain.len() == self.factors.len() + 1
            && self.chain.first() == Some(&self.module_dim)
            && self.chain.last() == Some(&0)
            && self
                .chain
                .windows(2)
                .zip(&self.factors)
                .all(|(w, f)| w[0] > w[1] && w[0] - w[1] == f.dim);
        let weighted: usize = self
            .grothendieck
            .iter()
            .enumerate()
            .map(|(lambda, &k)| {
                k * SimpleLabel::from_lambda(self.p, lambda as u64)
                    .map_or(0, |l| l.dim)
            })
            .sum();
        steps_ok
            && weighted == self.module_dim
            && self.grothendieck == grothendieck_vector(self.p, &self.factors)
    }

    pub fn chain_string(&self) -> String {
        self.chain
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(" ⊃ ")
    }
}

pub fn grothendieck_vector(p: u64, factors: &[SimpleLabel]) -> Vec<usize> {
    let mut v = vec![0; p as usize];
    for f in factors {
        v[f.lambda as usize] += 1;
    }
    v
}

/// Composition series with the submodules themselves, bottom to top
/// (`submodules[0]` is the first simple submodule found, the last is everything).
#[derive(Debug, Clone)]
pub struct CompositionSeries {
    pub report: CompositionReport,
    pub submodules: Vec<Subspace>,
}

/// Deterministic composition series: repeatedly take the lexicographically
/// smallest minimal submodule of the current quotient.
pub fn composition_series(m: &GradedGModule) -> Result<CompositionReport> {
    Ok(composition_series_with(m, DEFAULT_ENUMERATION_CAP, |_| 0)?.report)
}

/// Composition series where `choose` picks which of the (sorted) minimal
/// submodules of the current quotient to take next.
pub fn composition_series_with(
    m: &GradedGModule,
    cap: usize,
    mut choose: impl FnMut(&[Subspace]) -> usize,
) -> Result<CompositionSeries> {
    let f = m.field();
    let mut current = Subspace::zero(f, m.dim());
    let mut submodules = Vec::new();
    let mut bottom_up = Vec::new();
    while current.dim() < m.dim() {
        let candidates = minimal_submodules_over(m, &current, cap)?;
        if candidates.is_empty() {
            return Err(Error::NotSimple(
                "nonzero quotient without a minimal submodule".into(),
            ));
        }
        let pick = choose(&candidates).min(candidates.len() - 1);
        let next = candidates[pick].clone();
        let factor = m.subquotient_trusted(&next, &current)?.module;
        if let Some(failed) = factor.invariant_checks().into_iter().find(|c| !c.passed) {
            return Err(Error::ModuleInvariant(format!(
                "composition factor fails {}",
                failed.name
            )));
        }
        bottom_up.push(identify_simple(&factor)?);
        submodules.push(next.clone());
        current = next;
    }
    bottom_up.reverse();
    Ok(CompositionSeries {
        report: CompositionReport::from_factors(m.p(), bottom_up),
        submodules,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gmodules::{natural_module, simple_module, tensor_square_natural};

    #[test]
    fn natural_module_series() {
        let p = 5;
        let r = composition_series(&natural_module(p).unwrap()).unwrap();
        assert_eq!(r.chain, vec![5, 1, 0]);
        let lambdas: Vec<u64> = r.factors.iter().map(|f| f.lambda).collect();
        assert_eq!(lambdas, vec![4, 0]);
        assert_eq!(r.grothendieck, vec![1, 0, 0, 0, 1]);
        assert!(r.is_consistent());
        assert_eq!(r.chain_string(), "5 ⊃ 1 ⊃ 0");
    }

    #[test]
    fn simple_module_has_single_factor() {
        for lambda in 0..7 {
            let (l, label) = simple_module(7, lambda).unwrap();
            let r = composition_series(&l).unwrap();
            assert_eq!(r.factors, vec![label]);
        }
    }

    #[test]
    fn tensor_square_factor_count() {
        let r = composition_series(&tensor_square_natural(5).unwrap()).unwrap();
        assert!(r.is_consistent());
        assert_eq!(r.module_dim, 25);
        assert_eq!(r.grothendieck, vec![2, 1, 1, 1, 2]);
    }

    #[test]
    fn report_bookkeeping() {
        let p = 5;
        let l = |x| SimpleLabel::from_lambda(p, x).unwrap();
        let r = CompositionReport::from_factors(p, vec![l(4), l(0)]);
        assert_eq!(r.chain, vec![5, 1, 0]);
        assert!(r.is_consistent());
        let mut broken = r.clone();
        broken.chain[1] = 2;
        assert!(!broken.is_consistent());
    }
}
