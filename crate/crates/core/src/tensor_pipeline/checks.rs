use serde::Serialize;

use crate::error::Result;
use crate::ff_linalg::Subspace;
use crate::gmodules::{
    identify_simple, simple_module, tensor_product, weight_dims, GradedGModule, SimpleLabel,
};
use crate::module_structure::{
    composition_series, is_indecomposable_via_socle, is_simple, socle, CompositionReport,
};

use super::{ChainTerm, Parity, TensorDecomposition};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightRow {
    pub module: String,
    pub observed: Vec<usize>,
    pub expected: Vec<usize>,
}

impl WeightRow {
    pub fn matches(&self) -> bool {
        self.observed == self.expected
    }
}

/// Weight-space dimensions of A, A_s, A_a, A⁺, A_s⁺, A_a⁺ against their
/// closed forms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightTable {
    pub p: u64,
    pub rows: Vec<WeightRow>,
}

impl WeightTable {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(WeightRow::matches)
    }
}

/// `L(p-1) ⊗ L(p-1)` built as a Kronecker sum.
pub fn top_tensor_square(p: u64) -> Result<GradedGModule> {
    let (top, _) = simple_module(p, p - 1)?;
    tensor_product(&top, &top)
}

pub fn weight_table(d: &TensorDecomposition) -> Result<WeightTable> {
    let p = d.p as usize;
    let c = d.canonical()?;
    let flat = |v: usize| vec![v; p];
    let split = |zero: usize, rest: usize| {
        let mut v = vec![rest; p];
        v[0] = zero;
        v
    };
    let lxl = top_tensor_square(d.p)?;
    let entries: [(&str, &GradedGModule, Vec<usize>); 6] = [
        ("A", &d.a2, flat(p)),
        ("A_s", &c.sym_module.module, flat((p + 1) / 2)),
        ("A_a", &c.alt_module.module, flat((p - 1) / 2)),
        ("A+", &lxl, split(p - 1, p - 2)),
        ("A_s+", &c.sym_top.module, flat((p - 1) / 2)),
        ("A_a+", &c.alt_top.module, split((p - 1) / 2, (p - 3) / 2)),
    ];
    let rows = entries
        .into_iter()
        .map(|(name, m, expected)| {
            Ok(WeightRow {
                module: name.to_string(),
                observed: weight_dims(m)?,
                expected,
            })
        })
        .collect::<Result<_>>()?;
    Ok(WeightTable { p: d.p, rows })
}

/// Checks on one explicit chain `top[i_0] ⊋ top[i_1] ⊋ … ⊋ 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainVerification {
    pub parity: Parity,
    pub degrees: Vec<i64>,
    pub chain_dims: Vec<usize>,
    pub factors: Vec<SimpleLabel>,
    pub expected_factors: Vec<SimpleLabel>,
    pub factors_simple: Vec<bool>,
    /// `(i, v_{i+2} ∈ top[i])`.
    pub inclusions: Vec<(i64, bool)>,
    pub strictly_decreasing: bool,
    pub starts_at_top: bool,
    pub socle_simple: bool,
    pub socle_is_bottom: bool,
    pub oracle: CompositionReport,
    pub oracle_agrees: bool,
}

impl ChainVerification {
    pub fn passed(&self) -> bool {
        self.factors == self.expected_factors
            && self.factors_simple.iter().all(|&s| s)
            && self.inclusions.iter().all(|&(_, ok)| ok)
            && self.strictly_decreasing
            && self.starts_at_top
            && self.socle_simple
            && self.socle_is_bottom
            && self.oracle_agrees
    }

    pub fn report(&self) -> CompositionReport {
        CompositionReport::from_factors(self.oracle.p, self.factors.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MainTheoremReport {
    pub sym: ChainVerification,
    pub alt: ChainVerification,
    /// `dim A_s⁺[4]` and the predicted `p(p-3)/2`.
    pub sym_fourth_dim: (usize, usize),
}

impl MainTheoremReport {
    pub fn passed(&self) -> bool {
        self.sym.passed() && self.alt.passed() && self.sym_fourth_dim.0 == self.sym_fourth_dim.1
    }
}

/// Factor labels `top[i_k] / (top[i_k] ∩ top[i_{k+1}])`, top to bottom, with
/// a simplicity verdict for each. When the terms are nested this is the
/// ordinary successive quotient.
pub fn chain_factors(
    top: &GradedGModule,
    terms: &[ChainTerm],
) -> Result<Vec<(SimpleLabel, bool)>> {
    let zero = Subspace::zero(top.field(), top.dim());
    let mut out = Vec::with_capacity(terms.len());
    for (k, term) in terms.iter().enumerate() {
        let lower = match terms.get(k + 1) {
            Some(next) => term.submodule.intersect(&next.submodule)?,
            None => zero.clone(),
        };
        let factor = top.subquotient(&term.submodule, &lower)?.module;
        let simple = is_simple(&factor)?;
        out.push((identify_simple(&factor)?, simple));
    }
    Ok(out)
}

fn verify_chain(d: &TensorDecomposition, parity: Parity) -> Result<ChainVerification> {
    let p = d.p;
    let top = &d.canonical()?.top(parity).module;
    let chain = d.chains()?.get(parity);
    let terms = &chain.terms;
    let labelled = chain_factors(top, terms)?;
    let mut chain_dims: Vec<usize> = terms.iter().map(|t| t.submodule.dim()).collect();
    chain_dims.push(0);
    let oracle = composition_series(top)?;
    let factors: Vec<SimpleLabel> = labelled.iter().map(|(l, _)| *l).collect();
    let mut sorted = factors.clone();
    sorted.sort();
    let soc = socle(top)?;
    Ok(ChainVerification {
        parity,
        degrees: terms.iter().map(|t| t.degree).collect(),
        inclusions: chain.inclusions.clone(),
        strictly_decreasing: chain_dims.windows(2).all(|w| w[0] > w[1]),
        starts_at_top: chain.first_generates,
        chain_dims,
        expected_factors: terms
            .iter()
            .map(|t| SimpleLabel::from_lowest_degree(p, t.degree))
            .collect(),
        factors_simple: labelled.iter().map(|(_, s)| *s).collect(),
        factors,
        socle_simple: is_indecomposable_via_socle(top)?,
        socle_is_bottom: terms.last().is_some_and(|t| t.submodule == soc),
        oracle_agrees: oracle.factor_multiset() == sorted,
        oracle,
    })
}

pub fn verify_main_theorem(d: &TensorDecomposition) -> Result<MainTheoremReport> {
    let sym = verify_chain(d, Parity::Symmetric)?;
    let alt = verify_chain(d, Parity::Antisymmetric)?;
    let p = d.p as usize;
    let fourth = d
        .chains()?
        .sym
        .terms
        .iter()
        .find(|t| t.degree == 4)
        .map_or(0, |t| t.submodule.dim());
    Ok(MainTheoremReport {
        sym,
        alt,
        sym_fourth_dim: (fourth, p * (p - 3) / 2),
    })
}

/// Multiplicity vectors of A₍₂₎ and of L(p-1) ⊗ L(p-1), each obtained from
/// the pipeline pieces, from the generic composition series, and from the
/// closed form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GrothendieckReport {
    pub tensor_assembled: Vec<usize>,
    pub tensor_direct: Vec<usize>,
    pub tensor_expected: Vec<usize>,
    pub top_assembled: Vec<usize>,
    pub top_direct: Vec<usize>,
    pub top_expected: Vec<usize>,
    pub tensor_series: CompositionReport,
    pub top_series: CompositionReport,
}

impl GrothendieckReport {
    pub fn tensor_passed(&self) -> bool {
        self.tensor_assembled == self.tensor_expected && self.tensor_direct == self.tensor_expected
    }

    pub fn top_passed(&self) -> bool {
        self.top_assembled == self.top_expected && self.top_direct == self.top_expected
    }

    pub fn passed(&self) -> bool {
        self.tensor_passed() && self.top_passed()
    }
}

fn add_into(acc: &mut [usize], v: &[usize]) {
    for (a, b) in acc.iter_mut().zip(v) {
        *a += b;
    }
}

pub fn grothendieck_checks(d: &TensorDecomposition) -> Result<GrothendieckReport> {
    let p = d.p as usize;
    let c = d.canonical()?;
    let chains = d.chains()?;

    let chain_vector = |parity: Parity| -> Result<Vec<usize>> {
        let top = &c.top(parity).module;
        let mut v = vec![0; p];
        for (label, _) in chain_factors(top, chains.terms(parity))? {
            v[label.lambda as usize] += 1;
        }
        Ok(v)
    };
    let sym_top = chain_vector(Parity::Symmetric)?;
    let alt_top = chain_vector(Parity::Antisymmetric)?;
    let sym_prime = composition_series(&d.a2.restrict(&c.sym_prime)?.module)?;
    let alt_prime = composition_series(&d.a2.restrict(&c.alt_prime)?.module)?;

    let mut tensor_assembled = vec![0; p];
    for v in [&sym_prime.grothendieck, &sym_top, &alt_prime.grothendieck, &alt_top] {
        add_into(&mut tensor_assembled, v);
    }
    let tensor_series = composition_series(&d.a2)?;
    let mut tensor_expected = vec![1; p];
    tensor_expected[0] = 2;
    tensor_expected[p - 1] = 2;

    let mut top_assembled = sym_top;
    add_into(&mut top_assembled, &alt_top);
    let top_series = composition_series(&top_tensor_square(d.p)?)?;
    let mut top_expected = vec![1; p];
    top_expected[p - 1] = 0;

    Ok(GrothendieckReport {
        tensor_assembled,
        tensor_direct: tensor_series.grothendieck.clone(),
        tensor_expected,
        top_assembled,
        top_direct: top_series.grothendieck.clone(),
        top_expected,
        tensor_series,
        top_series,
    })
}
