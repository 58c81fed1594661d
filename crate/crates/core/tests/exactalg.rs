use ans::exactalg::{Matrix, Semiring, Vector};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Signed;
use proptest::prelude::*;

const N: usize = 3;

fn matrix(semiring: Semiring, lo: i64) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(lo..=4i64, N * N)
        .prop_map(move |e| Matrix::from_i64(semiring, N, N, &e).unwrap())
}

fn rational_matrix() -> impl Strategy<Value = Matrix> {
    proptest::collection::vec((-5i64..=5, 1i64..=4), N * N).prop_map(|e| {
        let entries = e
            .into_iter()
            .map(|(p, q)| BigRational::new(BigInt::from(p), BigInt::from(q)))
            .collect();
        Matrix::new(Semiring::Q, N, N, entries).unwrap()
    })
}

/// Product straight from the definition, on plain rationals.
fn naive_product(a: &Matrix, b: &Matrix) -> Vec<BigRational> {
    let mut out = Vec::new();
    for i in 0..a.rows() {
        for j in 0..b.cols() {
            let mut s = BigRational::from_integer(0.into());
            for t in 0..a.cols() {
                s += a.get(i, t) * b.get(t, j);
            }
            out.push(s);
        }
    }
    out
}

proptest! {
    #[test]
    fn product_matches_definition(a in rational_matrix(), b in rational_matrix()) {
        let product = a.mat_mul(&b).unwrap();
        prop_assert_eq!(product.entries().to_vec(), naive_product(&a, &b));
    }

    #[test]
    fn associativity(a in matrix(Semiring::Z, -4), b in matrix(Semiring::Z, -4), c in matrix(Semiring::Z, -4)) {
        let left = a.mat_mul(&b).unwrap().mat_mul(&c).unwrap();
        let right = a.mat_mul(&b.mat_mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn distributivity(a in rational_matrix(), b in rational_matrix(), c in rational_matrix()) {
        let left = a.mat_mul(&b.add(&c).unwrap()).unwrap();
        let right = a.mat_mul(&b).unwrap().add(&a.mat_mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn powers_add(m in matrix(Semiring::N, 0), i in 0u64..=8, j in 0u64..=8) {
        let lhs = m.pow(i + j).unwrap();
        let rhs = m.pow(i).unwrap().mat_mul(&m.pow(j).unwrap()).unwrap();
        prop_assert_eq!(&lhs, &rhs);
        let mut repeated = Matrix::identity(Semiring::N, N);
        for _ in 0..i + j {
            repeated = repeated.mat_mul(&m).unwrap();
        }
        prop_assert_eq!(lhs, repeated);
    }

    #[test]
    fn naturals_stay_natural(a in matrix(Semiring::N, 0), b in matrix(Semiring::N, 0)) {
        let p = a.mat_mul(&b).unwrap().add(&a).unwrap();
        prop_assert_eq!(p.semiring(), Semiring::N);
        prop_assert!(p.entries().iter().all(|e| !e.is_negative() && e.is_integer()));
        prop_assert!(a.negated().is_err() || a.is_zero());
    }

    #[test]
    fn rationals_reduced(a in rational_matrix(), b in rational_matrix()) {
        for e in a.mat_mul(&b).unwrap().entries() {
            prop_assert!(e.denom().is_positive());
            prop_assert!(e.numer().gcd(e.denom()) == BigInt::from(1) || e.numer() == &BigInt::from(0));
        }
    }

    #[test]
    fn kronecker_mixed_product(a in matrix(Semiring::Z, -3), b in matrix(Semiring::Z, -3),
                               c in matrix(Semiring::Z, -3), d in matrix(Semiring::Z, -3)) {
        let left = a.kronecker(&b).unwrap().mat_mul(&c.kronecker(&d).unwrap()).unwrap();
        let right = a.mat_mul(&c).unwrap().kronecker(&b.mat_mul(&d).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn vector_product_is_associative(v in proptest::collection::vec(-4i64..=4, N), a in matrix(Semiring::Z, -4), b in matrix(Semiring::Z, -4)) {
        let v = Vector::row_i64(Semiring::Z, &v).unwrap();
        let left = v.vec_mat(&a).unwrap().vec_mat(&b).unwrap();
        let right = v.vec_mat(&a.mat_mul(&b).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }
}

#[test]
fn semiring_mixing_is_checked() {
    let n = Matrix::identity(Semiring::N, 2);
    let q = Matrix::identity(Semiring::Q, 2);
    assert!(n.mat_mul(&q).is_err());
    assert_eq!(n.embed(Semiring::Q).unwrap().mat_mul(&q).unwrap(), q);
    assert!(q.embed(Semiring::N).is_err());
    let half = Matrix::new(
        Semiring::Q,
        1,
        1,
        vec![BigRational::new(1.into(), 2.into())],
    )
    .unwrap();
    assert!(half.embed(Semiring::Z).is_err());
    assert!(Matrix::from_i64(Semiring::N, 1, 1, &[-1]).is_err());
}
