use serde::Serialize;

use crate::error::Result;
use crate::ff_linalg::{FpScalar, Subspace};
use crate::module_structure::{composition_series, graded_bplus_spin_dims};

use super::{polynomial, Parity, TensorDecomposition};

/// One instance of a property check with its observed and expected values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Instance {
    pub label: String,
    pub observed: usize,
    pub expected: usize,
}

impl Instance {
    fn new(label: String, observed: usize, expected: usize) -> Self {
        Self {
            label,
            observed,
            expected,
        }
    }

    pub fn holds(&self) -> bool {
        self.observed == self.expected
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub name: &'static str,
    pub instances: Vec<Instance>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        !self.instances.is_empty() && self.instances.iter().all(Instance::holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Instance> {
        self.instances.iter().filter(|i| !i.holds())
    }
}

/// Rank of ρ(e_s) on the degree-n part of A₍₂₎ equals `dim A_n`, for
/// `s ∈ {1, 2}`, `n > 0`, `n + s < p`.
pub fn injectivity(d: &TensorDecomposition) -> Result<LemmaReport> {
    let p = d.p as i64;
    let mut instances = Vec::new();
    for s in 1..=2 {
        for n in 1..p - s {
            let cols: Vec<usize> = d
                .a2
                .degrees()
                .expect("A2 is graded")
                .iter()
                .enumerate()
                .filter(|(_, &deg)| deg == n)
                .map(|(c, _)| c)
                .collect();
            let rank = d.a2.rho(s).select_columns(&cols).rank();
            instances.push(Instance::new(format!("e_{s} on degree {n}"), rank, cols.len()));
        }
    }
    Ok(LemmaReport {
        name: "injectivity",
        instances,
    })
}

/// `e_{-1}(V_{l+i+1}) = V_{l+i}` for `0 ≤ l < p-2`, for every chain term
/// `V = u(g)·v_i` with `i ≢ 0`.
pub fn surjectivity(d: &TensorDecomposition) -> Result<LemmaReport> {
    let p = d.p as i64;
    let c = d.canonical()?;
    let chains = d.chains()?;
    let mut instances = Vec::new();
    for parity in [Parity::Symmetric, Parity::Antisymmetric] {
        let top = &c.top(parity).module;
        for term in chains.terms(parity) {
            let i = term.degree;
            if i.rem_euclid(p) == 0 {
                continue;
            }
            for l in 0..p - 2 {
                let upper = term.submodule.intersect(&top.degree_component(l + i + 1)?)?;
                let lower = term.submodule.intersect(&top.degree_component(l + i)?)?;
                let images: Vec<Vec<FpScalar>> =
                    upper.basis_vectors().map(|v| top.apply(-1, v)).collect();
                let image = Subspace::span(top.field(), top.dim(), &images);
                let observed = if image == lower { lower.dim() } else { image.dim() };
                instances.push(Instance::new(
                    format!("{} v_{i}, l = {l}", parity.top_name()),
                    observed,
                    lower.dim(),
                ));
            }
        }
    }
    Ok(LemmaReport {
        name: "surjectivity",
        instances,
    })
}

/// `dim u(b⁺)_l · v_i = ⌊l/2⌋ + 1` whenever `l + i ≤ p`.
pub fn graded_dims(d: &TensorDecomposition) -> Result<LemmaReport> {
    let p = d.p as i64;
    let c = d.canonical()?;
    let chains = d.chains()?;
    let mut instances = Vec::new();
    for parity in [Parity::Symmetric, Parity::Antisymmetric] {
        let top = &c.top(parity).module;
        for term in chains.terms(parity) {
            let i = term.degree;
            let dims = graded_bplus_spin_dims(top, &term.generator)?;
            for l in 0..=p - i {
                instances.push(Instance::new(
                    format!("{} v_{i}, l = {l}", parity.top_name()),
                    dims.get(&(i + l)).copied().unwrap_or(0),
                    (l / 2 + 1) as usize,
                ));
            }
        }
    }
    Ok(LemmaReport {
        name: "graded_dims",
        instances,
    })
}

/// The head of `u(g)·v_i` is the simple module with lowest weight `ī`.
/// Observed and expected values are lowest weights.
pub fn quotient_heads(d: &TensorDecomposition) -> Result<LemmaReport> {
    let p = d.p as i64;
    let c = d.canonical()?;
    let chains = d.chains()?;
    let mut instances = Vec::new();
    for parity in [Parity::Symmetric, Parity::Antisymmetric] {
        let top = &c.top(parity).module;
        for term in chains.terms(parity) {
            let cyclic = top.restrict(&term.submodule)?.module;
            let series = composition_series(&cyclic)?;
            let head = series.factors.first().map_or(usize::MAX, |f| f.lowest_weight as usize);
            instances.push(Instance::new(
                format!("{} v_{}", parity.top_name(), term.degree),
                head,
                term.degree.rem_euclid(p) as usize,
            ));
        }
    }
    Ok(LemmaReport {
        name: "quotient_heads",
        instances,
    })
}

/// The graded count breaks once `l + i > p`; for p = 5 the degree-6 part
/// of the symmetric top level is 2-dimensional.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeSixExample {
    pub component_dim: usize,
    pub matches_named_basis: bool,
    pub spin_dim: usize,
    pub formula_dim: usize,
}

impl DegreeSixExample {
    pub fn passed(&self) -> bool {
        self.component_dim == 2
            && self.matches_named_basis
            && self.spin_dim == 2
            && self.spin_dim != self.formula_dim
    }
}

/// Only meaningful for p = 5; returns `None` otherwise.
pub fn degree_six_example(d: &TensorDecomposition) -> Result<Option<DegreeSixExample>> {
    if d.p != 5 {
        return Ok(None);
    }
    let p = d.p;
    let top = &d.canonical()?.sym_top;
    let component = top.module.degree_component(6)?;
    let named = Subspace::span(
        d.field(),
        d.a2.dim(),
        &[
            polynomial(p, &[(1, 3, 3)]),
            polynomial(p, &[(1, 4, 2), (1, 2, 4)]),
        ],
    );
    let projected = top.project(&named)?;
    let v2 = &d.chains()?.sym.terms[0];
    let spin_dim = graded_bplus_spin_dims(&top.module, &v2.generator)?
        .get(&6)
        .copied()
        .unwrap_or(0);
    Ok(Some(DegreeSixExample {
        component_dim: component.dim(),
        matches_named_basis: projected == component,
        spin_dim,
        formula_dim: 4 / 2 + 1,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lemmas_hold_for_seven() {
        let d = TensorDecomposition::build(7).unwrap();
        for r in [
            injectivity(&d).unwrap(),
            surjectivity(&d).unwrap(),
            quotient_heads(&d).unwrap(),
        ] {
            assert!(r.passed(), "{}: {:?}", r.name, r.failures().collect::<Vec<_>>());
        }
        assert_eq!(degree_six_example(&d).unwrap(), None);
    }

    #[test]
    fn graded_count_drops_at_degree_p_for_alternating_generators() {
        let d = TensorDecomposition::build(7).unwrap();
        let r = graded_dims(&d).unwrap();
        let failed: Vec<&str> = r.failures().map(|i| i.label.as_str()).collect();
        assert_eq!(failed, vec!["AaPlus v_3, l = 4", "AaPlus v_5, l = 2"]);
        assert!(r.failures().all(|i| i.observed + 1 == i.expected));
    }

    #[test]
    fn degree_six_for_five() {
        let d = TensorDecomposition::build(5).unwrap();
        let ex = degree_six_example(&d).unwrap().unwrap();
        assert!(ex.passed(), "{ex:?}");
        assert_eq!(ex.formula_dim, 3);
    }
}
