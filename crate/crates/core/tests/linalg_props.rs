use proptest::prelude::*;
use witt_core::ff_linalg::{kernel, FpMatrix, PrimeField, Subspace};

fn matrix(max: usize) -> impl Strategy<Value = (u64, FpMatrix)> {
    (prop::sample::select(vec![5u64, 7]), 1..=max, 1..=max).prop_flat_map(|(p, r, c)| {
        prop::collection::vec(0..p, r * c).prop_map(move |data| {
            let f = PrimeField::new(p).unwrap();
            (p, FpMatrix::from_vec(f, r, c, data))
        })
    })
}

/// Random invertible matrix as a product of a unit lower and a unit upper
/// triangular matrix.
fn invertible(f: PrimeField, n: usize, seed: &[u64]) -> FpMatrix {
    let mut l = FpMatrix::identity(f, n);
    let mut u = FpMatrix::identity(f, n);
    let mut k = 0;
    for r in 0..n {
        for c in 0..n {
            let x = f.reduce(seed[k % seed.len()] + k as u64);
            k += 1;
            if c < r {
                l.set(r, c, x);
            } else if c > r {
                u.set(r, c, x);
            }
        }
    }
    l.mul(&u)
}

proptest! {
    #[test]
    fn rref_is_idempotent((_, m) in matrix(12)) {
        let r = m.rref();
        prop_assert_eq!(r.matrix.rref().matrix, r.matrix.clone());
        prop_assert_eq!(r.matrix.rref().pivots, r.pivots);
    }

    #[test]
    fn rank_plus_nullity((_, m) in matrix(12)) {
        let k = kernel(&m);
        prop_assert_eq!(m.rank() + k.dim(), m.cols());
        for v in k.basis_vectors() {
            prop_assert!(m.mul_vec(v).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn row_space_is_canonical(
        (p, m) in matrix(12),
        seed in prop::collection::vec(0u64..1000, 1..20),
    ) {
        let f = PrimeField::new(p).unwrap();
        let t = invertible(f, m.rows(), &seed);
        prop_assert_eq!(Subspace::row_space(&t.mul(&m)), Subspace::row_space(&m));
    }

    #[test]
    fn sum_and_intersection_dimensions(
        (p, a) in matrix(12),
        data in prop::collection::vec(0u64..7, 144),
        rows in 1usize..=12,
    ) {
        let f = PrimeField::new(p).unwrap();
        let n = a.cols();
        let b = FpMatrix::from_vec(
            f,
            rows,
            n,
            data[..rows * n].iter().map(|&x| x % p).collect(),
        );
        let (sa, sb) = (Subspace::row_space(&a), Subspace::row_space(&b));
        let sum = sa.sum(&sb).unwrap();
        let meet = sa.intersect(&sb).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), sa.dim() + sb.dim());
        prop_assert!(meet.is_subspace_of(&sa).unwrap() && meet.is_subspace_of(&sb).unwrap());
        prop_assert!(sa.is_subspace_of(&sum).unwrap() && sb.is_subspace_of(&sum).unwrap());
    }
}
