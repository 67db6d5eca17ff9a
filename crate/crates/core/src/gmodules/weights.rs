use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::ff_linalg::{kernel, FpMatrix, FpScalar, Subspace};

use super::label::SimpleLabel;
use super::module::GradedGModule;

/// Eigenspaces of ρ(e_0), one entry per λ ∈ F_p (zero subspaces included).
///
/// Errors if the eigenspaces fail to fill the module, which cannot happen for
/// a restricted module since ρ(e_0)^p = ρ(e_0).
pub fn weight_decomposition(m: &GradedGModule) -> Result<BTreeMap<FpScalar, Subspace>> {
    let f = m.field();
    let h = m.rho(0);
    let id = FpMatrix::identity(f, m.dim());
    let mut out = BTreeMap::new();
    let mut total = 0;
    for lambda in f.elements() {
        let space = kernel(&h.sub(&id.scale(lambda)));
        total += space.dim();
        out.insert(lambda, space);
    }
    if total != m.dim() {
        return Err(Error::IncompleteWeightDecomposition {
            found: total,
            dim: m.dim(),
        });
    }
    Ok(out)
}

/// Dimension of every weight space, indexed by λ = 0..p-1.
pub fn weight_dims(m: &GradedGModule) -> Result<Vec<usize>> {
    Ok(weight_decomposition(m)?
        .values()
        .map(Subspace::dim)
        .collect())
}

/// e_0-eigenvalue of a nonzero weight vector `v`, if it is one.
pub fn weight_of(m: &GradedGModule, v: &[FpScalar]) -> Option<FpScalar> {
    let f = m.field();
    let c = v.iter().position(|&x| x != 0)?;
    let image = m.apply(0, v);
    let lambda = f.mul(image[c], f.inv(v[c]));
    image
        .iter()
        .zip(v)
        .all(|(&y, &x)| y == f.mul(lambda, x))
        .then_some(lambda)
}

/// Names a simple module by the weight of its vector killed by e_{-1}.
///
/// The caller certifies simplicity; the kernel dimension and the module
/// dimension are cross-checked against the classification.
pub fn identify_simple(m: &GradedGModule) -> Result<SimpleLabel> {
    let p = m.p();
    match m.dim() {
        0 => Err(Error::NotSimple("zero module".into())),
        1 => {
            if m.algebra().indices().all(|i| m.rho(i).is_zero()) {
                SimpleLabel::from_lambda(p, 0)
            } else {
                Err(Error::NotSimple("one-dimensional but not trivial".into()))
            }
        }
        dim => {
            let k = kernel(m.rho(-1));
            if k.dim() != 1 {
                return Err(Error::NotSimple(format!(
                    "ker e_-1 has dimension {} (expected 1)",
                    k.dim()
                )));
            }
            let v = k.basis().row(0);
            let mu = weight_of(m, v).ok_or_else(|| {
                Error::NotSimple("vector killed by e_-1 is not an e_0 eigenvector".into())
            })?;
            let label = SimpleLabel::from_lowest_weight(p, mu)?;
            if label.dim != dim {
                return Err(Error::NotSimple(format!(
                    "lowest weight {mu} predicts dimension {} but module has {dim}",
                    label.dim
                )));
            }
            Ok(label)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gmodules::{
        adjoint_module, natural_module, simple_module, tensor_square_natural, verma_module,
    };

    #[test]
    fn natural_weights_are_degrees() {
        let a = natural_module(7).unwrap();
        let w = weight_decomposition(&a).unwrap();
        for (lambda, s) in &w {
            assert_eq!(s.dim(), 1);
            assert_eq!(s.basis().row(0)[*lambda as usize], 1);
        }
    }

    #[test]
    fn tensor_square_weight_spaces_have_dim_p() {
        let a2 = tensor_square_natural(5).unwrap();
        assert_eq!(weight_dims(&a2).unwrap(), vec![5; 5]);
    }

    #[test]
    fn trivial_module_has_single_weight() {
        let (l0, _) = simple_module(5, 0).unwrap();
        assert_eq!(weight_dims(&l0).unwrap(), vec![1, 0, 0, 0, 0]);
    }

    #[test]
    fn identifies_simples() {
        let p = 7;
        for lambda in 0..p {
            let (m, label) = simple_module(p, lambda).unwrap();
            assert_eq!(identify_simple(&m).unwrap(), label);
        }
        let (top, _) = simple_module(p, p - 1).unwrap();
        let label = identify_simple(&top).unwrap();
        assert_eq!((label.lambda, label.lowest_weight, label.dim), (6, 1, 6));
        let z3 = identify_simple(&verma_module(p, 3).unwrap()).unwrap();
        assert_eq!((z3.lambda, z3.lowest_weight, z3.dim), (3, 4, 7));
    }

    #[test]
    fn adjoint_is_l_p_minus_2() {
        for p in [5, 7, 11] {
            let label = identify_simple(&adjoint_module(p).unwrap()).unwrap();
            assert_eq!(label.lambda, p - 2);
        }
    }

    #[test]
    fn rejects_non_simple_input() {
        // A(1): e_-1 kills only the constants, whose weight 0 predicts dimension 1.
        let a = natural_module(5).unwrap();
        assert!(matches!(identify_simple(&a), Err(Error::NotSimple(_))));
        let a2 = tensor_square_natural(5).unwrap();
        assert!(matches!(identify_simple(&a2), Err(Error::NotSimple(_))));
    }
}
