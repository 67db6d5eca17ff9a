use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use witt_core::gmodules::{
    direct_sum, natural_module, simple_module, tensor_square_natural, GradedGModule,
};
use witt_core::module_structure::{composition_series, composition_series_with};
use witt_core::tensor_pipeline::{checks::top_tensor_square, Parity, TensorDecomposition};

fn modules(p: u64) -> Vec<(String, GradedGModule)> {
    let d = TensorDecomposition::build(p).unwrap();
    let c = d.canonical().unwrap();
    let (l1, _) = simple_module(p, 1).unwrap();
    vec![
        ("A1".into(), natural_module(p).unwrap()),
        ("A2".into(), tensor_square_natural(p).unwrap()),
        ("AsPlus".into(), c.top(Parity::Symmetric).module.clone()),
        ("AaPlus".into(), c.top(Parity::Antisymmetric).module.clone()),
        ("LxL".into(), top_tensor_square(p).unwrap()),
        ("L1+L1".into(), direct_sum(&l1, &l1).unwrap()),
    ]
}

#[test]
fn factor_multiset_survives_random_choices() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for p in [5u64, 7] {
        for (name, m) in modules(p) {
            let reference = composition_series(&m).unwrap().factor_multiset();
            for shuffle in 0..6 {
                let s = composition_series_with(&m, 5, |c| rng.gen_range(0..c.len())).unwrap();
                assert!(s.report.is_consistent());
                assert_eq!(
                    s.report.factor_multiset(),
                    reference,
                    "p = {p}, {name}, shuffle {shuffle}"
                );
                let top = s.submodules.last().unwrap();
                assert!(top.is_full());
            }
        }
    }
}

#[test]
fn series_is_deterministic() {
    let m = tensor_square_natural(7).unwrap();
    assert_eq!(composition_series(&m).unwrap(), composition_series(&m).unwrap());
}
