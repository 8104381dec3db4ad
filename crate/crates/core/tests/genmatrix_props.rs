use affcell::genmatrix::{elementary, mat_add, GenMatrixAlgebra, Integers, Matrix};
use num_bigint::BigInt;
use proptest::prelude::*;

fn matrix(n: usize) -> impl Strategy<Value = Matrix<BigInt>> {
    prop::collection::vec(-4i64..=4, n * n).prop_map(move |v| Matrix::from_fn(n, |j, l| BigInt::from(v[j * n + l])))
}

fn triple_with_psi() -> impl Strategy<Value = (Matrix<BigInt>, Matrix<BigInt>, Matrix<BigInt>, Matrix<BigInt>)> {
    (1usize..=3).prop_flat_map(|n| (matrix(n), matrix(n), matrix(n), matrix(n)))
}

proptest! {
    #[test]
    fn multiplication_is_associative((psi, x, y, z) in triple_with_psi()) {
        let g = GenMatrixAlgebra::new(Integers, psi);
        let left = g.multiply(&g.multiply(&x, &y).unwrap(), &z).unwrap();
        let right = g.multiply(&x, &g.multiply(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn multiplication_distributes((psi, x, y, z) in triple_with_psi()) {
        let g = GenMatrixAlgebra::new(Integers, psi);
        let lhs = g.multiply(&x, &mat_add(&Integers, &y, &z)).unwrap();
        let rhs = mat_add(&Integers, &g.multiply(&x, &y).unwrap(), &g.multiply(&x, &z).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn involution_is_involutive((psi, x, _y, _z) in triple_with_psi()) {
        let g = GenMatrixAlgebra::new(Integers, psi);
        prop_assert_eq!(g.involution(&g.involution(&x)), x);
    }

    /// κ reverses products on all elementary matrices exactly when Ψ passes
    /// the symmetry check.
    #[test]
    fn anti_automorphism_iff_sigma_rho(psi in (1usize..=3).prop_flat_map(matrix)) {
        let n = psi.size();
        let g = GenMatrixAlgebra::new(Integers, psi);
        let mut reverses = true;
        for j in 0..n { for l in 0..n { for p in 0..n { for q in 0..n {
            let x = elementary(&Integers, n, j, l, BigInt::from(1));
            let y = elementary(&Integers, n, p, q, BigInt::from(1));
            let lhs = g.involution(&g.multiply(&x, &y).unwrap());
            let rhs = g.multiply(&g.involution(&y), &g.involution(&x)).unwrap();
            reverses &= lhs == rhs;
        }}}}
        prop_assert_eq!(reverses, g.check_sigma_rho().passed);
    }
}

#[test]
fn shape_mismatch_is_an_error() {
    let g = GenMatrixAlgebra::new(Integers, Matrix::filled(2, BigInt::from(1)));
    assert!(g.multiply(&Matrix::filled(3, BigInt::from(0)), &Matrix::filled(2, BigInt::from(0))).is_err());
}
