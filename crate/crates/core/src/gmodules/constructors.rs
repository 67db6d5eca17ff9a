use crate::error::{Error, Result};
use crate::ff_linalg::{FpMatrix, Subspace};
use crate::witt_algebra::WittAlgebra;

use super::label::SimpleLabel;
use super::module::GradedGModule;

fn power_name(var: &str, e: u64) -> Option<String> {
    match e {
        0 => None,
        1 => Some(var.to_string()),
        _ => Some(format!("{var}^{e}")),
    }
}

/// `x1^a*x2^b`, with `1` for the constant monomial.
pub fn monomial_name(a: u64, b: u64) -> String {
    let parts: Vec<String> = [power_name("x1", a), power_name("x2", b)]
        .into_iter()
        .flatten()
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// The defining representation A(1) = F_p[x]/(x^p): `e_k · x^j = j x^{j+k}`.
pub fn natural_module(p: u64) -> Result<GradedGModule> {
    let g = WittAlgebra::new(p)?;
    let f = g.field();
    let n = p as usize;
    let action = g
        .indices()
        .map(|k| {
            let mut m = FpMatrix::zeros(f, n, n);
            for j in 0..n as i64 {
                let target = j + k;
                if (0..n as i64).contains(&target) {
                    m.set(target as usize, j as usize, f.from_i64(j));
                }
            }
            m
        })
        .collect();
    let degrees = (0..n as i64).collect();
    let names = (0..p)
        .map(|j| power_name("x", j).unwrap_or_else(|| "1".into()))
        .collect();
    GradedGModule::new(g, action, Some(degrees), Some(names))
}

/// Verma module Z(λ) on `m_0, ..., m_{p-1}` with
/// `e_k · m_j = (j + k + 1 + (k + 1) λ) m_{j+k}`.
pub fn verma_module(p: u64, lambda: u64) -> Result<GradedGModule> {
    let g = WittAlgebra::new(p)?;
    if lambda >= p {
        return Err(Error::LabelOutOfRange { lambda, p });
    }
    let f = g.field();
    let n = p as usize;
    let lam = lambda as i64;
    let action = g
        .indices()
        .map(|k| {
            let mut m = FpMatrix::zeros(f, n, n);
            for j in 0..n as i64 {
                let target = j + k;
                if (0..n as i64).contains(&target) {
                    m.set(
                        target as usize,
                        j as usize,
                        f.from_i64(j + k + 1 + (k + 1) * lam),
                    );
                }
            }
            m
        })
        .collect();
    let degrees = (0..n as i64).collect();
    let names = (0..p).map(|j| format!("m{j}")).collect();
    GradedGModule::new(g, action, Some(degrees), Some(names))
}

/// The simple module L(λ): Z(λ) itself for `1 <= λ <= p-2`, the trivial
/// quotient of Z(0), and Z(p-1) modulo its trivial submodule.
pub fn simple_module(p: u64, lambda: u64) -> Result<(GradedGModule, SimpleLabel)> {
    let label = SimpleLabel::from_lambda(p, lambda)?;
    let z = verma_module(p, lambda)?;
    let f = z.field();
    let n = p as usize;
    let module = if lambda == 0 {
        let radical: Vec<usize> = (0..n - 1).collect();
        z.quotient(&Subspace::coordinate(f, n, &radical))?.module
    } else if lambda == p - 1 {
        z.quotient(&Subspace::coordinate(f, n, &[0]))?.module
    } else {
        z
    };
    debug_assert_eq!(module.dim(), label.dim);
    Ok((module, label))
}

/// The adjoint module: ρ(e_i) = ad(e_i) on the basis `e_{-1}, ..., e_{p-2}`.
pub fn adjoint_module(p: u64) -> Result<GradedGModule> {
    let g = WittAlgebra::new(p)?;
    let action = g.indices().map(|i| g.ad_matrix(i)).collect::<Result<_>>()?;
    let degrees = g.indices().collect();
    let names = g.indices().map(|i| format!("e_{i}")).collect();
    GradedGModule::new(g, action, Some(degrees), Some(names))
}

/// `a ⊗ b` with ρ(e) ⊗ 1 + 1 ⊗ ρ(e); basis pair `(s, t)` sits at `s * dim b + t`.
pub fn tensor_product(a: &GradedGModule, b: &GradedGModule) -> Result<GradedGModule> {
    let g = a.algebra();
    if b.algebra() != g {
        return Err(Error::ModuleInvariant("modules over different algebras".into()));
    }
    let f = g.field();
    let ia = FpMatrix::identity(f, a.dim());
    let ib = FpMatrix::identity(f, b.dim());
    let action = g
        .indices()
        .map(|i| a.rho(i).kronecker(&ib).add(&ia.kronecker(b.rho(i))))
        .collect();
    let degrees = match (a.degrees(), b.degrees()) {
        (Some(da), Some(db)) => Some(
            da.iter()
                .flat_map(|&x| db.iter().map(move |&y| x + y))
                .collect(),
        ),
        _ => None,
    };
    let names = match (a.basis_names(), b.basis_names()) {
        (Some(na), Some(nb)) => Some(
            na.iter()
                .flat_map(|x| nb.iter().map(move |y| format!("({x})⊗({y})")))
                .collect(),
        ),
        _ => None,
    };
    GradedGModule::new(g, action, degrees, names)
}

pub fn direct_sum(a: &GradedGModule, b: &GradedGModule) -> Result<GradedGModule> {
    let g = a.algebra();
    if b.algebra() != g {
        return Err(Error::ModuleInvariant("modules over different algebras".into()));
    }
    let action = g.indices().map(|i| a.rho(i).block_diag(b.rho(i))).collect();
    let degrees = match (a.degrees(), b.degrees()) {
        (Some(da), Some(db)) => Some(da.iter().chain(db).copied().collect()),
        _ => None,
    };
    GradedGModule::new(g, action, degrees, None)
}

/// A(1) ⊗ A(1) realised as F_p[x1, x2]/(x1^p, x2^p) with
/// `e_j · f = x1^{j+1} ∂f/∂x1 + x2^{j+1} ∂f/∂x2`.
///
/// Monomials are ordered lexicographically in `(a, b)` (index `a * p + b`)
/// and graded by total degree. The result is checked entrywise against the
/// Kronecker-sum construction.
pub fn tensor_square_natural(p: u64) -> Result<GradedGModule> {
    let g = WittAlgebra::new(p)?;
    let f = g.field();
    let n = p as usize;
    let idx = |a: i64, b: i64| a as usize * n + b as usize;
    let in_range = |e: i64| (0..n as i64).contains(&e);
    let action: Vec<FpMatrix> = g
        .indices()
        .map(|j| {
            let mut m = FpMatrix::zeros(f, n * n, n * n);
            for a in 0..n as i64 {
                for b in 0..n as i64 {
                    // x1^{j+1} ∂/∂x1 (x1^a x2^b) = a x1^{a+j} x2^b
                    if in_range(a + j) && a != 0 {
                        m.add_at(idx(a + j, b), idx(a, b), f.from_i64(a));
                    }
                    if in_range(b + j) && b != 0 {
                        m.add_at(idx(a, b + j), idx(a, b), f.from_i64(b));
                    }
                }
            }
            m
        })
        .collect();
    let degrees = (0..n as i64)
        .flat_map(|a| (0..n as i64).map(move |b| a + b))
        .collect();
    let names = (0..p)
        .flat_map(|a| (0..p).map(move |b| monomial_name(a, b)))
        .collect();
    let direct = GradedGModule::new(g, action, Some(degrees), Some(names))?;

    let a1 = natural_module(p)?;
    let kron = tensor_product(&a1, &a1)?;
    for i in g.indices() {
        if direct.rho(i) != kron.rho(i) {
            return Err(Error::ModuleInvariant(format!(
                "derivation formula and Kronecker sum disagree on e_{i}"
            )));
        }
    }
    Ok(direct)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff_linalg::FpScalar;
    use crate::gmodules::module::is_module_isomorphism;

    fn mono(p: u64, a: u64, b: u64) -> Vec<FpScalar> {
        let mut v = vec![0; (p * p) as usize];
        v[(a * p + b) as usize] = 1;
        v
    }

    #[test]
    fn natural_module_action() {
        let a = natural_module(5).unwrap();
        assert_eq!(a.apply(-1, &[0, 1, 0, 0, 0]), vec![1, 0, 0, 0, 0]);
        for j in 0..5 {
            assert_eq!(a.rho(0).get(j, j), j as u64);
        }
        // e_3 · x^2 = 2 x^5 = 0
        assert_eq!(a.apply(3, &[0, 0, 1, 0, 0]), vec![0; 5]);
        assert_eq!(a.basis_names().unwrap()[2], "x^2");
    }

    #[test]
    fn verma_action() {
        let p = 7;
        for lambda in 0..p {
            let z = verma_module(p, lambda).unwrap();
            assert_eq!(z.apply(-1, &z.unit_vector(0)), vec![0; 7]);
            for j in 0..p {
                assert_eq!(z.rho(0).get(j as usize, j as usize), (j + 1 + lambda) % p);
            }
        }
        assert!(matches!(
            verma_module(7, 7),
            Err(Error::LabelOutOfRange { .. })
        ));
    }

    #[test]
    fn natural_module_is_top_verma() {
        for p in [5, 7, 11] {
            let a = natural_module(p).unwrap();
            let z = verma_module(p, p - 1).unwrap();
            for i in a.algebra().indices() {
                assert_eq!(a.rho(i), z.rho(i));
            }
        }
    }

    #[test]
    fn simple_dims() {
        let p = 7;
        for lambda in 0..p {
            let (m, label) = simple_module(p, lambda).unwrap();
            assert_eq!(m.dim(), label.dim);
        }
        let (l0, _) = simple_module(p, 0).unwrap();
        assert!(l0.algebra().indices().all(|i| l0.rho(i).is_zero()));
    }

    #[test]
    fn adjoint_brackets() {
        let ad = adjoint_module(5).unwrap();
        let e_m1 = ad.unit_vector(0);
        assert_eq!(ad.apply(-1, &e_m1), vec![0; 5]);
        // [e_0, e_{-1}] = -e_{-1}
        assert_eq!(ad.apply(0, &e_m1), vec![4, 0, 0, 0, 0]);
    }

    #[test]
    fn tensor_square_examples() {
        let p = 5;
        let a2 = tensor_square_natural(p).unwrap();
        assert_eq!(a2.dim(), 25);
        let x1x2 = mono(p, 1, 1);
        let mut expected = mono(p, 2, 1);
        expected[(p + 2) as usize] = 1;
        assert_eq!(a2.apply(1, &x1x2), expected);
        let mut expected = mono(p, 1, 0);
        expected[1] = 1;
        assert_eq!(a2.apply(-1, &x1x2), expected);
        assert_eq!(a2.basis_names().unwrap()[(p + 1) as usize], "x1*x2");
        assert_eq!(a2.degrees().unwrap()[(3 * p + 4) as usize], 7);
    }

    #[test]
    fn direct_sum_and_tensor_shapes() {
        let (l1, _) = simple_module(5, 1).unwrap();
        let (l2, _) = simple_module(5, 2).unwrap();
        assert_eq!(direct_sum(&l1, &l2).unwrap().dim(), 10);
        let (top, _) = simple_module(5, 4).unwrap();
        assert_eq!(tensor_product(&top, &top).unwrap().dim(), 16);
    }

    #[test]
    fn isomorphism_check_detects_scaling() {
        let a = natural_module(5).unwrap();
        let id = FpMatrix::identity(a.field(), 5);
        assert!(is_module_isomorphism(&a, &a, &id));
        let scaled = id.scale(3);
        assert!(is_module_isomorphism(&a, &a, &scaled));
        let mut bad = id.clone();
        bad.set(0, 0, 2);
        assert!(!is_module_isomorphism(&a, &a, &bad));
    }
}
