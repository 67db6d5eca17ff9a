use std::collections::BTreeMap;
use std::time::Instant;

use crate::error::{Error, Result};
use crate::ff_linalg::{is_prime, kernel, FpMatrix, Subspace};
use crate::gmodules::{
    adjoint_module, format_combination, identify_simple, natural_module, simple_module,
    tensor_square_natural, verma_module, GradedGModule, SimpleLabel,
};
use crate::module_structure::{composition_series, CompositionReport};
use crate::tensor_pipeline::checks::{chain_factors, top_tensor_square, ChainVerification};
use crate::tensor_pipeline::lemmas::{self, LemmaReport};
use crate::tensor_pipeline::{
    grothendieck_checks, verify_main_theorem, weight_table, Parity, TensorDecomposition,
};
use crate::witt_algebra::{verify_structure, AxiomCheck};

use super::{ChainRow, ChainTable, Check, ModuleSelector, SeriesEntry, VerificationReport};

/// Largest prime (exclusive) accepted from the command line; A₍₂₎ has
/// dimension p².
pub const MAX_CLI_PRIME: u64 = 1 << 15;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RunOptions {
    pub timings: bool,
}

pub fn validate_prime(p: u64) -> Result<()> {
    if p >= MAX_CLI_PRIME {
        return Err(Error::PrimeTooLarge {
            p,
            bound: MAX_CLI_PRIME,
        });
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p <= 3 {
        return Err(Error::PrimeTooSmall(p));
    }
    Ok(())
}

struct Timer {
    enabled: bool,
    phases: BTreeMap<String, f64>,
    start: Instant,
}

impl Timer {
    fn new(enabled: bool) -> Self {
        Self {
            enabled,
            phases: BTreeMap::new(),
            start: Instant::now(),
        }
    }

    fn lap(&mut self, phase: &str) {
        let ms = self.start.elapsed().as_secs_f64() * 1e3;
        *self.phases.entry(phase.to_string()).or_insert(0.0) += ms;
        self.start = Instant::now();
    }

    fn finish(self) -> Option<BTreeMap<String, f64>> {
        self.enabled.then_some(self.phases)
    }
}

fn axiom_check(prefix: &str, c: &AxiomCheck) -> Check {
    let detail = if c.passed {
        format!("{} cases", c.cases)
    } else {
        format!("{} cases; failures: {}", c.cases, c.failures.join(", "))
    };
    Check::new(&format!("{prefix}.{}", c.name), c.passed, detail)
}

fn error_check(name: &str, e: &Error) -> Check {
    Check::new(name, false, e.to_string())
}

fn lemma_check(name: &str, r: &LemmaReport) -> Check {
    let failures: Vec<String> = r
        .failures()
        .map(|i| format!("{} (got {}, want {})", i.label, i.observed, i.expected))
        .collect();
    let detail = if failures.is_empty() {
        format!("{} instances", r.instances.len())
    } else {
        format!(
            "{} of {} instances fail: {}",
            failures.len(),
            r.instances.len(),
            failures.join("; ")
        )
    };
    Check::new(name, failures.is_empty(), detail)
}

fn structure_checks(report: &mut VerificationReport, p: u64) {
    match verify_structure(p) {
        Ok(s) => s.checks.iter().for_each(|c| report.push(axiom_check("algebra", c))),
        Err(e) => report.push(error_check("algebra", &e)),
    }
}

/// Every constructor's own output, by name.
fn constructed_modules(p: u64) -> Result<Vec<(String, GradedGModule)>> {
    let mut out = vec![("A(1)".to_string(), natural_module(p)?)];
    for lambda in 0..p {
        out.push((format!("Z({lambda})"), verma_module(p, lambda)?));
    }
    for lambda in 0..p {
        out.push((format!("L({lambda})"), simple_module(p, lambda)?.0));
    }
    out.push(("adjoint".into(), adjoint_module(p)?));
    out.push(("A2".into(), tensor_square_natural(p)?));
    out.push(("L(p-1)⊗L(p-1)".into(), top_tensor_square(p)?));
    Ok(out)
}

fn module_axiom_check(name: &str, modules: &[(String, &GradedGModule)]) -> Check {
    let mut cases = 0;
    let mut failures = Vec::new();
    for (label, m) in modules {
        for c in m.invariant_checks() {
            cases += c.cases;
            if !c.passed {
                failures.push(format!("{label}: {}", c.name));
            }
        }
    }
    let detail = if failures.is_empty() {
        format!("{} modules, {cases} cases", modules.len())
    } else {
        format!("failures: {}", failures.join(", "))
    };
    Check::new(name, failures.is_empty(), detail)
}

fn module_checks(report: &mut VerificationReport, p: u64) {
    let modules = match constructed_modules(p) {
        Ok(m) => m,
        Err(e) => return report.push(error_check("modules.construct", &e)),
    };
    let refs: Vec<(String, &GradedGModule)> =
        modules.iter().map(|(n, m)| (n.clone(), m)).collect();
    report.push(module_axiom_check("modules.axioms", &refs));

    let a1 = &modules[0].1;
    let z = &modules[p as usize].1;
    let same = a1.algebra().indices().all(|i| a1.rho(i) == z.rho(i));
    report.push(Check::new(
        "modules.natural_is_verma",
        same,
        format!("A(1) and Z({}) share all {p} action matrices", p - 1),
    ));

    let adjoint = &modules.iter().find(|(n, _)| n == "adjoint").expect("listed").1;
    let check = match identify_simple(adjoint) {
        Ok(l) => Check::new(
            "modules.adjoint",
            l.lambda == p - 2,
            format!("adjoint ≅ {} = {}", l.highest(), l.lowest()),
        ),
        Err(e) => error_check("modules.adjoint", &e),
    };
    report.push(check);

    let mut bad = Vec::new();
    for lambda in 0..p {
        let (m, label) = &simple_module(p, lambda).expect("built above");
        if identify_simple(m).ok() != Some(*label) {
            bad.push(label.highest());
        }
    }
    report.push(Check::new(
        "modules.simple_labels",
        bad.is_empty(),
        if bad.is_empty() {
            format!("{p} simple modules identified")
        } else {
            format!("misidentified: {}", bad.join(", "))
        },
    ));
}

/// Exercises the exact linear algebra on the action matrices of A₍₂₎.
fn linalg_checks(report: &mut VerificationReport, p: u64) {
    let a2 = match tensor_square_natural(p) {
        Ok(m) => m,
        Err(e) => return report.push(error_check("linalg", &e)),
    };
    let f = a2.field();
    let n = a2.dim();
    let mats: Vec<(i64, &FpMatrix)> = a2.algebra().indices().map(|i| (i, a2.rho(i))).collect();
    // Unipotent upper-triangular change of basis.
    let mut t = FpMatrix::identity(f, n);
    for r in 0..n {
        for c in r + 1..n {
            t.set(r, c, ((r * 7 + c * 3) as u64) % p);
        }
    }

    let mut fails: BTreeMap<&str, Vec<String>> = BTreeMap::new();
    let names = [
        "rref_idempotent",
        "rank_nullity",
        "kernel",
        "canonical_form",
        "sum_intersection",
    ];
    for name in names {
        fails.insert(name, Vec::new());
    }
    for (k, &(i, m)) in mats.iter().enumerate() {
        let r = m.rref();
        if r.matrix.rref().matrix != r.matrix {
            fails.get_mut("rref_idempotent").unwrap().push(format!("e_{i}"));
        }
        let ker = kernel(m);
        if r.rank + ker.dim() != n {
            fails.get_mut("rank_nullity").unwrap().push(format!("e_{i}"));
        }
        if ker.basis_vectors().any(|v| m.mul_vec(v).iter().any(|&x| x != 0)) {
            fails.get_mut("kernel").unwrap().push(format!("e_{i}"));
        }
        if Subspace::row_space(m) != Subspace::row_space(&t.mul(m)) {
            fails.get_mut("canonical_form").unwrap().push(format!("e_{i}"));
        }
        let (j, other) = mats[(k + 1) % mats.len()];
        let kb = kernel(other);
        let ok = match (ker.sum(&kb), ker.intersect(&kb)) {
            (Ok(s), Ok(x)) => s.dim() + x.dim() == ker.dim() + kb.dim(),
            _ => false,
        };
        if !ok {
            fails
                .get_mut("sum_intersection")
                .unwrap()
                .push(format!("ker e_{i}, ker e_{j}"));
        }
    }
    for name in names {
        let f = &fails[name];
        let detail = if f.is_empty() {
            format!("{} matrices of size {n}", mats.len())
        } else {
            format!("failures: {}", f.join(", "))
        };
        report.push(Check::new(&format!("linalg.{name}"), f.is_empty(), detail));
    }
}

pub fn run_selftest(p: u64, opts: RunOptions) -> Result<VerificationReport> {
    validate_prime(p)?;
    let mut report = VerificationReport::new(p, "selftest");
    let mut timer = Timer::new(opts.timings);
    structure_checks(&mut report, p);
    timer.lap("algebra");
    module_checks(&mut report, p);
    timer.lap("modules");
    linalg_checks(&mut report, p);
    timer.lap("linalg");
    report.timing = timer.finish();
    Ok(report)
}

fn polynomial_string(d: &TensorDecomposition, parity: Parity, v: &[u64]) -> String {
    let top = d.canonical().expect("built").top(parity);
    let names = d.a2.basis_names().expect("A2 is named");
    format_combination(d.field(), &top.lift_vector(v), names)
}

fn chain_table(d: &TensorDecomposition, parity: Parity) -> Result<ChainTable> {
    let top = &d.canonical()?.top(parity).module;
    let chain = d.chains()?.get(parity);
    let factors = chain_factors(top, &chain.terms)?;
    let rows = chain
        .terms
        .iter()
        .zip(factors)
        .map(|(t, (label, simple))| ChainRow {
            degree: t.degree,
            generator: polynomial_string(d, parity, &t.generator),
            dim: t.submodule.dim(),
            factor: label.highest(),
            factor_lowest: label.lowest(),
            simple,
        })
        .collect();
    Ok(ChainTable {
        module: parity.top_name().to_string(),
        dim: top.dim(),
        kernel_dims: chain.kernel_dims.clone(),
        rows,
    })
}

fn labels(ls: &[SimpleLabel]) -> String {
    ls.iter().map(SimpleLabel::lowest).collect::<Vec<_>>().join(", ")
}

fn chain_checks(report: &mut VerificationReport, v: &ChainVerification) {
    let name = match v.parity {
        Parity::Symmetric => "symmetric",
        Parity::Antisymmetric => "antisymmetric",
    };
    let factors_ok = v.factors == v.expected_factors && v.factors_simple.iter().all(|&s| s);
    report.push(Check::new(
        &format!("theorem.{name}_factors"),
        factors_ok,
        format!(
            "factors {}; expected {}",
            labels(&v.factors),
            labels(&v.expected_factors)
        ),
    ));
    let missing: Vec<String> = v
        .inclusions
        .iter()
        .filter(|(_, ok)| !ok)
        .map(|(i, _)| format!("v_{} ∉ [{i}]", i + 2))
        .collect();
    let nested = missing.is_empty() && v.starts_at_top && v.strictly_decreasing;
    let dims = v
        .chain_dims
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ⊃ ");
    let mut detail = format!("dim {}; terms {dims}", v.oracle.module_dim);
    if !v.starts_at_top {
        detail.push_str(&format!("; [{}] is a proper submodule", v.degrees[0]));
    }
    if !missing.is_empty() {
        detail.push_str(&format!("; {}", missing.join(", ")));
    }
    report.push(Check::new(&format!("theorem.{name}_chain"), nested, detail));
    report.push(Check::new(
        &format!("theorem.{name}_socle"),
        v.socle_simple && v.socle_is_bottom,
        if v.socle_simple {
            "socle simple and equal to the last chain term".to_string()
        } else {
            "socle is not simple; indecomposability is not certified".to_string()
        },
    ));
    report.push(Check::new(
        &format!("theorem.{name}_oracle"),
        v.oracle_agrees,
        format!("generic series {}", labels(&v.oracle.factors)),
    ));
}

fn vector(v: &[usize]) -> String {
    format!(
        "[{}]",
        v.iter().map(usize::to_string).collect::<Vec<_>>().join(", ")
    )
}

fn pipeline_checks(report: &mut VerificationReport, p: u64, timer: &mut Timer) {
    let d = match TensorDecomposition::build(p) {
        Ok(d) => d,
        Err(e) => return report.push(error_check("tensor.build", &e)),
    };
    let c = d.canonical().expect("built");
    report.push(Check::new(
        "tensor.split",
        true,
        format!("dim A_s = {}, dim A_a = {}", d.sym.dim(), d.alt.dim()),
    ));
    report.push(Check::new(
        "tensor.canonical",
        true,
        "A_s' ≅ A(1) ≅ Z(p-1), A_a' ≅ L(p-1)",
    ));
    let pieces = [
        ("A_s".to_string(), &c.sym_module.module),
        ("A_a".to_string(), &c.alt_module.module),
        ("A_s+".to_string(), &c.sym_top.module),
        ("A_a+".to_string(), &c.alt_top.module),
    ];
    report.push(module_axiom_check("tensor.module_axioms", &pieces));
    timer.lap("pipeline");

    match lemmas::injectivity(&d) {
        Ok(r) => report.push(lemma_check("lemmas.injectivity", &r)),
        Err(e) => report.push(error_check("lemmas.injectivity", &e)),
    }
    match lemmas::surjectivity(&d) {
        Ok(r) => report.push(lemma_check("lemmas.surjectivity", &r)),
        Err(e) => report.push(error_check("lemmas.surjectivity", &e)),
    }
    timer.lap("lemmas");

    match weight_table(&d) {
        Ok(t) => {
            let bad: Vec<&str> = t
                .rows
                .iter()
                .filter(|r| !r.matches())
                .map(|r| r.module.as_str())
                .collect();
            report.push(Check::new(
                "tensor.weight_table",
                bad.is_empty(),
                if bad.is_empty() {
                    "all six rows match".to_string()
                } else {
                    format!("rows differ: {}", bad.join(", "))
                },
            ));
            report.tables.weight_table = Some(t);
        }
        Err(e) => report.push(error_check("tensor.weight_table", &e)),
    }

    let chains = d.chains().expect("built");
    let kd: Vec<String> = [Parity::Symmetric, Parity::Antisymmetric]
        .into_iter()
        .filter(|&par| !chains.get(par).kernel_dims_match(par, p))
        .map(|par| par.top_name().to_string())
        .collect();
    report.push(Check::new(
        "chains.kernel_dims",
        kd.is_empty(),
        if kd.is_empty() {
            "one lowest-weight line at each generator degree, none elsewhere".to_string()
        } else {
            format!("unexpected kernel dimensions in {}", kd.join(", "))
        },
    ));
    match lemmas::graded_dims(&d) {
        Ok(r) => report.push(lemma_check("chains.graded_dims", &r)),
        Err(e) => report.push(error_check("chains.graded_dims", &e)),
    }
    match lemmas::degree_six_example(&d) {
        Ok(Some(ex)) => report.push(Check::new(
            "chains.degree_six",
            ex.passed(),
            format!(
                "dim (A_s+)_6 = {}, spanned by x1^3*x2^3, x1^4*x2^2 + x1^2*x2^4: {}; graded count {} vs formula {}",
                ex.component_dim, ex.matches_named_basis, ex.spin_dim, ex.formula_dim
            ),
        )),
        Ok(None) => report.push(Check::skipped("chains.degree_six", "only stated for p = 5")),
        Err(e) => report.push(error_check("chains.degree_six", &e)),
    }
    match lemmas::quotient_heads(&d) {
        Ok(r) => report.push(lemma_check("chains.quotient_heads", &r)),
        Err(e) => report.push(error_check("chains.quotient_heads", &e)),
    }
    for parity in [Parity::Symmetric, Parity::Antisymmetric] {
        match chain_table(&d, parity) {
            Ok(t) => report.tables.chains.push(t),
            Err(e) => report.push(error_check("chains.table", &e)),
        }
    }
    timer.lap("chains");

    let a1_series = natural_module(p).and_then(|m| composition_series(&m));
    match verify_main_theorem(&d) {
        Ok(t) => {
            chain_checks(report, &t.sym);
            chain_checks(report, &t.alt);
            let (got, want) = t.sym_fourth_dim;
            report.push(Check::new(
                "theorem.codimension",
                got == want,
                format!("dim A_s+[4] = {got}, expected p(p-3)/2 = {want}"),
            ));
            if let Ok(s) = &a1_series {
                report.series.push(SeriesEntry::new("A1", s));
            }
            report.series.push(SeriesEntry::new("AsPlus", &t.sym.oracle));
            report.series.push(SeriesEntry::new("AaPlus", &t.alt.oracle));
        }
        Err(e) => report.push(error_check("theorem", &e)),
    }
    timer.lap("theorem");

    match grothendieck_checks(&d) {
        Ok(g) => {
            report.push(Check::new(
                "corollary.tensor_square",
                g.tensor_passed(),
                format!(
                    "assembled {}, generic {}, expected {}",
                    vector(&g.tensor_assembled),
                    vector(&g.tensor_direct),
                    vector(&g.tensor_expected)
                ),
            ));
            report.push(Check::new(
                "corollary.top_square",
                g.top_passed(),
                format!(
                    "assembled {}, generic {}, expected {}",
                    vector(&g.top_assembled),
                    vector(&g.top_direct),
                    vector(&g.top_expected)
                ),
            ));
            report.series.push(SeriesEntry::new("A2", &g.tensor_series));
            report.series.push(SeriesEntry::new("LxL", &g.top_series));
        }
        Err(e) => report.push(error_check("corollary", &e)),
    }
    const ORDER: [&str; 5] = ["A1", "A2", "AsPlus", "AaPlus", "LxL"];
    report
        .series
        .sort_by_key(|s| ORDER.iter().position(|&n| n == s.module));
    timer.lap("corollary");
}

pub fn run_verify(p: u64, opts: RunOptions) -> Result<VerificationReport> {
    validate_prime(p)?;
    let mut report = VerificationReport::new(p, "verify");
    let mut timer = Timer::new(opts.timings);
    structure_checks(&mut report, p);
    timer.lap("algebra");
    module_checks(&mut report, p);
    timer.lap("modules");
    pipeline_checks(&mut report, p, &mut timer);
    report.timing = timer.finish();
    Ok(report)
}

/// Composition series of one named module. Errors only on bad input.
pub fn run_series(p: u64, selector: ModuleSelector, opts: RunOptions) -> Result<VerificationReport> {
    validate_prime(p)?;
    if let ModuleSelector::Verma(l) | ModuleSelector::Simple(l) = selector {
        if l >= p {
            return Err(Error::LabelOutOfRange { lambda: l, p });
        }
    }
    let mut report = VerificationReport::new(p, "series");
    let mut timer = Timer::new(opts.timings);
    let name = selector.to_string();
    let series: Result<CompositionReport> =
        selector.build(p).and_then(|m| composition_series(&m));
    timer.lap("series");
    match series {
        Ok(s) => {
            report.push(Check::new(
                "series.consistent",
                s.is_consistent(),
                format!("{name}: dim {}, {} factors", s.module_dim, s.factors.len()),
            ));
            report.series.push(SeriesEntry::new(&name, &s));
        }
        Err(e) => report.push(error_check("series", &e)),
    }
    report.timing = timer.finish();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_validation() {
        assert_eq!(validate_prime(9), Err(Error::NotPrime(9)));
        assert_eq!(validate_prime(3), Err(Error::PrimeTooSmall(3)));
        assert_eq!(validate_prime(2), Err(Error::PrimeTooSmall(2)));
        assert!(matches!(validate_prime(32771), Err(Error::PrimeTooLarge { .. })));
        assert_eq!(validate_prime(0), Err(Error::NotPrime(0)));
        assert!(validate_prime(5).is_ok());
    }

    #[test]
    fn selftest_passes() {
        let r = run_selftest(7, RunOptions::default()).unwrap();
        assert!(r.passed(), "{:?}", r.failed_checks().collect::<Vec<_>>());
        assert!(r.timing.is_none());
    }

    #[test]
    fn series_of_natural_module() {
        let r = run_series(5, ModuleSelector::A1, RunOptions::default()).unwrap();
        assert_eq!(r.series[0].chain_string(), "5 ⊃ 1 ⊃ 0");
        assert_eq!(r.series[0].factors, vec!["L(4)", "L(0)"]);
        assert!(run_series(5, ModuleSelector::Simple(5), RunOptions::default()).is_err());
    }
}
