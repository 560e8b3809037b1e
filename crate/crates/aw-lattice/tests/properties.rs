//! Randomized property suites for the exact linear-algebra core and the
//! module constructions.  Everything is exact, so each property is an
//! identity, not an approximation.

use aw_lattice::aw::{build_vd, vd_is_irreducible, AwParams};
use aw_lattice::eigen::{char_poly, eval_poly};
use aw_lattice::matrix::Matrix;
use aw_lattice::scalar::{format_scalar, frac, parse_scalar, QContext, Scalar};
use aw_lattice::subspace::{spin, Subspace};
use num::Zero;
use proptest::prelude::*;

fn scalar_strategy() -> impl Strategy<Value = Scalar> {
    (-20i64..=20, 1i64..=20).prop_map(|(n, d)| frac(n, d))
}

fn nonzero_scalar() -> impl Strategy<Value = Scalar> {
    scalar_strategy().prop_filter("nonzero", |s| !s.is_zero())
}

fn matrix_strategy(n: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(scalar_strategy(), n * n).prop_map(move |data| {
        Matrix::from_fn(n, n, |i, j| data[i * n + j].clone())
    })
}

fn vectors_strategy(n: usize, count: usize) -> impl Strategy<Value = Vec<Vec<Scalar>>> {
    proptest::collection::vec(proptest::collection::vec(scalar_strategy(), n), 1..=count)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalar_format_parse_round_trip(s in scalar_strategy()) {
        prop_assert_eq!(parse_scalar(&format_scalar(&s)).unwrap(), s);
    }

    #[test]
    fn rank_nullity(m in matrix_strategy(4)) {
        prop_assert_eq!(m.rank() + m.kernel_basis().rows(), 4);
    }

    #[test]
    fn rref_is_idempotent(m in matrix_strategy(4)) {
        let (r, pivots) = m.rref();
        let (rr, pivots2) = r.rref();
        prop_assert_eq!(r, rr);
        prop_assert_eq!(pivots, pivots2);
    }

    #[test]
    fn kernel_vectors_are_killed(m in matrix_strategy(4)) {
        let k = m.kernel_basis();
        for row in k.row_vecs() {
            prop_assert!(m.mul_vec(&row).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn subspace_canonical_round_trip(rows in vectors_strategy(4, 4)) {
        let s = Subspace::from_spanning(4, &rows);
        prop_assert_eq!(Subspace::from_spanning(4, &s.basis_rows()), s);
    }

    #[test]
    fn sum_intersection_dimension_formula(
        rows_u in vectors_strategy(4, 3),
        rows_w in vectors_strategy(4, 3),
    ) {
        let u = Subspace::from_spanning(4, &rows_u);
        let w = Subspace::from_spanning(4, &rows_w);
        prop_assert_eq!(
            u.dim() + w.dim(),
            u.sum(&w).dim() + u.intersect(&w).dim()
        );
    }

    #[test]
    fn modular_law(
        rows_u in vectors_strategy(4, 2),
        rows_x in vectors_strategy(4, 2),
        rows_extra in vectors_strategy(4, 2),
    ) {
        // W contains U by construction, so (U + X) n W = U + (X n W).
        let u = Subspace::from_spanning(4, &rows_u);
        let mut w_rows = rows_u.clone();
        w_rows.extend(rows_extra);
        let w = Subspace::from_spanning(4, &w_rows);
        let x = Subspace::from_spanning(4, &rows_x);
        let lhs = u.sum(&x).intersect(&w);
        let rhs = u.sum(&x.intersect(&w));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn spin_is_idempotent_and_invariant(
        m1 in matrix_strategy(3),
        m2 in matrix_strategy(3),
        seed in proptest::collection::vec(scalar_strategy(), 3),
    ) {
        let ops = [&m1, &m2];
        let s = spin(3, &[seed], &ops);
        prop_assert_eq!(&spin(3, &s.basis_rows(), &ops), &s);
        prop_assert!(ops.iter().all(|op| s.is_invariant_under(op)));
    }

    #[test]
    fn char_poly_vanishes_on_triangular_spectrum(
        diag in proptest::collection::vec(scalar_strategy(), 3),
        below in proptest::collection::vec(scalar_strategy(), 3),
    ) {
        let m = Matrix::from_fn(3, 3, |i, j| {
            if i == j {
                diag[i].clone()
            } else if i > j {
                below[i + j - 1].clone()
            } else {
                Scalar::zero()
            }
        });
        let cp = char_poly(&m);
        prop_assert_eq!(cp.len(), 4);
        for entry in &diag {
            prop_assert!(eval_poly(&cp, entry).is_zero());
        }
    }

    #[test]
    fn vd_relations_hold_for_arbitrary_parameters(
        a in nonzero_scalar(),
        b in nonzero_scalar(),
        c in nonzero_scalar(),
        d in 0usize..=3,
    ) {
        let ctx = QContext::default_q();
        let params = AwParams { a, b, c, d };
        if let Ok(m) = build_vd(&params, &ctx) {
            let rel = m.action.check_relations(&ctx);
            prop_assert!(rel.ok, "relations failed: {rel:?}");
            // Twisting preserves the relations.
            let rel_t = m.action.twist_z2(&ctx).check_relations(&ctx);
            prop_assert!(rel_t.ok);
            // On irreducible modules the Casimir acts as a scalar.
            if vd_is_irreducible(&params, &ctx) {
                prop_assert!(rel.casimir_scalar.is_some());
            }
        }
    }
}
