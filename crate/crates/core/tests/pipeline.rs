use witt_core::ff_linalg::Subspace;
use witt_core::gmodules::{identify_simple, natural_module, verma_module, SimpleLabel};
use witt_core::module_structure::{
    composition_series, graded_bplus_spin_dims, lowest_weight_vectors, minimal_submodules, socle,
};
use witt_core::tensor_pipeline::{
    grothendieck_checks, polynomial, verify_main_theorem, weight_table, Parity,
    TensorDecomposition,
};

#[test]
fn verma_three_is_simple_with_shifted_lowest_weight() {
    for p in [5u64, 7, 11] {
        let l = identify_simple(&verma_module(p, 3).unwrap()).unwrap();
        assert_eq!((l.lambda, l.lowest_weight, l.dim), (3, 4, p as usize));
    }
}

#[test]
fn constants_are_the_socle_of_the_natural_module() {
    let a = natural_module(7).unwrap();
    assert_eq!(minimal_submodules(&a).unwrap(), vec![Subspace::coordinate(a.field(), 7, &[0])]);
    let r = composition_series(&a).unwrap();
    assert_eq!(r.chain, vec![7, 1, 0]);
}

#[test]
fn lowest_weight_generators_are_the_expected_polynomials() {
    let p = 7;
    let d = TensorDecomposition::build(p).unwrap();
    let c = d.canonical().unwrap();
    let sym = lowest_weight_vectors(&c.sym_top.module).unwrap();
    let v2 = sym.degree(2).unwrap();
    assert_eq!(v2.dim(), 1);
    assert!(c.sym_top.represents(v2.basis().row(0), &polynomial(p, &[(1, 1, 1)])).unwrap());
    assert_eq!(sym.degree_dim(5), 0);
    let alt = lowest_weight_vectors(&c.alt_top.module).unwrap();
    let v3 = alt.degree(3).unwrap().basis().row(0).to_vec();
    let named = polynomial(p, &[(1, 2, 1), (-1, 1, 2)]);
    let negated = polynomial(p, &[(-1, 2, 1), (1, 1, 2)]);
    assert!(
        c.alt_top.represents(&v3, &named).unwrap() || c.alt_top.represents(&v3, &negated).unwrap()
    );
}

#[test]
fn graded_count_at_degree_p() {
    for p in [5u64, 7, 11, 13] {
        let d = TensorDecomposition::build(p).unwrap();
        let top = &d.canonical().unwrap().sym_top.module;
        let v2 = &d.chains().unwrap().sym.terms[0].generator;
        let dims = graded_bplus_spin_dims(top, v2).unwrap();
        assert_eq!(dims[&2], 1);
        assert_eq!(dims[&(p as i64)], (p as usize - 1) / 2);
    }
}

#[test]
fn symmetric_top_for_five() {
    let d = TensorDecomposition::build(5).unwrap();
    let t = verify_main_theorem(&d).unwrap();
    let lambdas: Vec<u64> = t.sym.oracle.factor_multiset().iter().map(|f| f.lambda).collect();
    assert_eq!(lambdas, vec![1, 3]);
    assert_eq!(t.sym.oracle.module_dim, 10);
    let top = &d.canonical().unwrap().sym_top.module;
    assert_eq!(&socle(top).unwrap(), &d.chains().unwrap().sym.terms[1].submodule);
}

#[test]
fn symmetric_chain_matches_for_all_primes() {
    for p in [5u64, 7, 11, 13] {
        let d = TensorDecomposition::build(p).unwrap();
        let t = verify_main_theorem(&d).unwrap();
        assert!(t.sym.passed(), "p = {p}: {:?}", t.sym);
        assert_eq!(t.sym_fourth_dim.0, t.sym_fourth_dim.1);
        let expected: Vec<SimpleLabel> = (2..p as i64)
            .step_by(2)
            .map(|i| SimpleLabel::from_lowest_degree(p, i))
            .collect();
        assert_eq!(t.sym.factors, expected);
    }
}

#[test]
fn antisymmetric_top_splits_off_the_trivial_module() {
    for p in [5u64, 7, 11, 13] {
        let d = TensorDecomposition::build(p).unwrap();
        let t = verify_main_theorem(&d).unwrap();
        assert_eq!(t.alt.factors, t.alt.expected_factors);
        assert!(t.alt.factors_simple.iter().all(|&s| s));
        assert!(t.alt.oracle_agrees);
        assert!(!t.alt.starts_at_top);
        assert!(!t.alt.socle_simple);
        let top = &d.canonical().unwrap().alt_top.module;
        let terms = &d.chains().unwrap().alt.terms;
        let first = &terms[0].submodule;
        let trivial = &terms.last().unwrap().submodule;
        assert_eq!(first.dim() + 1, top.dim());
        assert!(first.intersect(trivial).unwrap().is_zero());
        assert!(first.sum(trivial).unwrap().is_full());
    }
}

#[test]
fn multiplicities_for_five() {
    let d = TensorDecomposition::build(5).unwrap();
    let g = grothendieck_checks(&d).unwrap();
    assert_eq!(g.tensor_direct, vec![2, 1, 1, 1, 2]);
    assert_eq!(g.top_direct, vec![1, 1, 1, 1, 0]);
    assert!(g.passed());
    assert!(weight_table(&d).unwrap().passed());
}

#[test]
fn kernel_dimensions_by_parity() {
    for p in [5u64, 7, 11, 13] {
        let d = TensorDecomposition::build(p).unwrap();
        let chains = d.chains().unwrap();
        for parity in [Parity::Symmetric, Parity::Antisymmetric] {
            assert!(chains.get(parity).kernel_dims_match(parity, p));
        }
    }
}
