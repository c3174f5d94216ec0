use num_bigint::BigInt;
use proptest::prelude::*;
use qct_core::closedform::{bf_rhs, BFParams};
use qct_core::products::{bf_factors, build_bf, build_qdyson, pair_factors};
use qct_core::qring::{interpolate, UniPoly};
use qct_core::{qbinom, qpoch, MLaurent, QFrac, QLaurent, Shape};

fn qlaurent() -> impl Strategy<Value = QLaurent> {
    prop::collection::vec((-4i64..6, -5i64..6), 0..5)
        .prop_map(|ts| QLaurent::from_terms(ts.into_iter().map(|(e, c)| (e, BigInt::from(c)))))
}

fn qfrac() -> impl Strategy<Value = QFrac> {
    (qlaurent(), qlaurent()).prop_filter_map("zero denominator", |(n, d)| QFrac::new(n, d).ok())
}

/// Sparse polynomial in `x_1..x_n` with small integer coefficients.
fn sparse(n: usize) -> impl Strategy<Value = MLaurent<QLaurent>> {
    prop::collection::vec((prop::collection::vec(-2i32..3, n), -3i64..4, -2i64..3), 0..8).prop_map(move |ts| {
        let mut f = MLaurent::<QLaurent>::zero(n);
        for (e, c, k) in ts {
            f = f.try_add(&MLaurent::monomial(n, &e, QLaurent::monomial(BigInt::from(c), k)).unwrap()).unwrap();
        }
        f
    })
}

fn small_shape() -> impl Strategy<Value = Shape> {
    prop::collection::vec(1usize..3, 1..4).prop_filter_map("n <= 4", |p| {
        (p.iter().sum::<usize>() <= 4).then(|| Shape::new(p).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn qpoch_splits(m in -6i64..=6, z1 in 0i64..=6, z2 in 0i64..=6) {
        let whole = qpoch(m, z1 + z2).unwrap();
        let parts = qpoch(m, z1).unwrap() * qpoch(m + z1, z2).unwrap();
        prop_assert_eq!(whole, parts);
    }

    #[test]
    fn qbinom_symmetric_and_positive(n in 0u64..=10, c in 0u64..=10) {
        prop_assume!(c <= n);
        let g = qbinom(n, c);
        prop_assert_eq!(&g, &qbinom(n, n - c));
        prop_assert!(g.terms().all(|(_, k)| k > &BigInt::from(0)));
    }

    #[test]
    fn normalization_is_idempotent(x in qfrac()) {
        let again = QFrac::new(x.numer().clone(), x.denom().clone()).unwrap();
        prop_assert_eq!(again, x);
    }

    #[test]
    fn interpolation_inverts_evaluation(coeffs in prop::collection::vec(qfrac(), 1..=6), start in -3i64..3) {
        let p = UniPoly::new(coeffs);
        let nodes: Vec<(QFrac, QFrac)> = (0..6).map(|i| {
            let z = QFrac::q_pow(start + i);
            (z.clone(), p.eval(&z))
        }).collect();
        prop_assert_eq!(UniPoly::new(interpolate(&nodes).unwrap()), p);
    }

    #[test]
    fn ct_commutes(f in sparse(4), i in 1usize..=4, j in 1usize..=4) {
        let ij = f.ct(&[i]).unwrap().ct(&[j]).unwrap();
        let ji = f.ct(&[j]).unwrap().ct(&[i]).unwrap();
        prop_assert_eq!(ij, ji);
    }

    #[test]
    fn ct_is_linear(f in sparse(3), g in sparse(3), v in prop::sample::subsequence(vec![1usize, 2, 3], 0..=3)) {
        let lhs = f.try_add(&g).unwrap().ct(&v).unwrap();
        let rhs = f.ct(&v).unwrap().try_add(&g.ct(&v).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn subst_shift_is_multiplicative(f in sparse(4), g in sparse(4), k in prop::collection::vec(-3i64..4, 2)) {
        let u = [2usize, 4];
        let fg = f.try_mul(&g).unwrap().subst_shift(&u, &k).unwrap();
        let prod = f.subst_shift(&u, &k).unwrap().try_mul(&g.subst_shift(&u, &k).unwrap()).unwrap();
        prop_assert_eq!(fg, prod);
    }

    #[test]
    fn products_are_homogeneous(shape in small_shape(), a in 0usize..3, b in 0usize..3, c in 0usize..3, k in -3i64..4) {
        prop_assert!(pair_factors(&shape, c).expand::<QLaurent>().unwrap().is_degree_zero_homogeneous());
        prop_assert!(build_qdyson(&[a, b, c]).unwrap().is_degree_zero_homogeneous());
        // x_i -> q^k x_i for every i leaves the constant term alone
        let f = build_bf(&shape, a, b, c).unwrap();
        let mut scaled = MLaurent::<QFrac>::zero_based(f.base(), f.arity());
        for (e, x) in f.terms() {
            scaled.add_term(e.clone(), x.mul_q_pow(k * e.total()));
        }
        prop_assert_eq!(scaled.ct_all(), f.ct_all());
    }

    #[test]
    fn block_order_is_irrelevant(n0 in 1usize..3, x in 1usize..3, y in 1usize..3, a in 0usize..2, b in 0usize..2, c in 0usize..3) {
        let s1 = Shape::new(vec![n0, x, y]).unwrap();
        let s2 = Shape::new(vec![n0, y, x]).unwrap();
        let ct1: QFrac = bf_factors(&s1, a, b, c).ct::<QLaurent>().unwrap().into();
        let ct2: QFrac = bf_factors(&s2, a, b, c).ct::<QLaurent>().unwrap().into();
        prop_assert_eq!(&ct1, &ct2);
        prop_assert_eq!(bf_rhs(&BFParams::new(s1, a, b, c)).unwrap(), ct1);
    }
}
