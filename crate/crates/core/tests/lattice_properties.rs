mod common;

use luttinger::lattice::{
    cycle_intersection_matrix, essential_three_tori, embedded_tori, intersect, quotient_group, snf,
    AbelianGroup, CoordinateSubtorus, IntegerMatrix, Intersection, Root8,
};
use num::{BigInt, Integer, One, Signed, Zero};
use proptest::prelude::*;

use common::{determinantal_divisor, rank_over_q};

fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=6, 1usize..=6).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-9i64..=9, c), r)
    })
}

fn to_matrix(rows: &[Vec<i64>]) -> IntegerMatrix {
    IntegerMatrix::from_rows(rows[0].len(), rows).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn snf_is_a_valid_decomposition(rows in matrix()) {
        let m = to_matrix(&rows);
        let res = snf(&m);
        prop_assert_eq!(res.u.mul(&m).unwrap().mul(&res.v).unwrap(), res.d.clone());
        prop_assert_eq!(res.u.determinant().unwrap().abs(), BigInt::one());
        prop_assert_eq!(res.v.determinant().unwrap().abs(), BigInt::one());
        for i in 0..res.d.rows() {
            for j in 0..res.d.cols() {
                if i != j {
                    prop_assert!(res.d[(i, j)].is_zero());
                }
            }
        }
        let diag = res.diagonal();
        for w in diag.windows(2) {
            prop_assert!(!w[0].is_negative() && !w[1].is_negative());
            if w[0].is_zero() {
                prop_assert!(w[1].is_zero());
            } else {
                prop_assert!(w[1].is_multiple_of(&w[0]));
            }
        }
        // d_1 ⋯ d_k equals the gcd of k×k minors.
        let big = m.to_rows();
        let mut prefix = BigInt::one();
        for (k, d) in diag.iter().enumerate() {
            prefix *= d;
            prop_assert_eq!(&prefix, &determinantal_divisor(&big, k + 1));
        }
        prop_assert_eq!(res.rank(), rank_over_q(&big));
    }

    #[test]
    fn row_negation_preserves_snf(rows in matrix(), which in 0usize..6) {
        let m = to_matrix(&rows);
        let mut negated = rows.clone();
        let i = which % negated.len();
        for x in &mut negated[i] {
            *x = -*x;
        }
        prop_assert_eq!(snf(&m).diagonal(), snf(&to_matrix(&negated)).diagonal());
    }

    #[test]
    fn quotient_ignores_redundant_relations(rows in matrix(), coeffs in prop::collection::vec(-3i64..=3, 6)) {
        let n = rows[0].len();
        let m = to_matrix(&rows);
        let combo: Vec<i64> = (0..n)
            .map(|j| rows.iter().zip(&coeffs).map(|(r, c)| r[j] * c).sum())
            .collect();
        let extended = m.stack(&to_matrix(&[combo])).unwrap();
        prop_assert_eq!(quotient_group(n, &m).unwrap(), quotient_group(n, &extended).unwrap());
    }

    #[test]
    fn quotient_rank_and_order(rows in matrix()) {
        let n = rows[0].len();
        let m = to_matrix(&rows);
        let g = quotient_group(n, &m).unwrap();
        let big = m.to_rows();
        let r = rank_over_q(&big);
        prop_assert_eq!(g.rank(), n - r);
        if r > 0 {
            prop_assert_eq!(g.torsion_order(), determinantal_divisor(&big, r).abs());
        }
    }

    #[test]
    fn intersection_is_symmetric_with_dimension_law(
        a_free in prop::collection::vec(any::<bool>(), 6),
        b_free in prop::collection::vec(any::<bool>(), 6),
        a_vals in prop::collection::vec(0i64..8, 6),
        b_vals in prop::collection::vec(0i64..2, 6),
    ) {
        let build = |free: &[bool], vals: &[i64]| {
            let f: Vec<usize> = (1..=6).filter(|c| free[c - 1]).collect();
            let fixed: Vec<(usize, Root8)> =
                (1..=6).filter(|c| !free[c - 1]).map(|c| (c, Root8::new(vals[c - 1]))).collect();
            CoordinateSubtorus::new(f, fixed).unwrap()
        };
        let a = build(&a_free, &a_vals);
        let b = build(&b_free, &b_vals);
        let ab = intersect(&a, &b);
        let ba = intersect(&b, &a);
        prop_assert_eq!(&ab, &ba);
        let both = a.free().intersection(b.free()).count();
        let either = a.free().union(b.free()).count();
        let clash = (1..=6).any(|c| matches!((a.fixed_value(c), b.fixed_value(c)), (Some(x), Some(y)) if x != y));
        match ab {
            Intersection::Empty => prop_assert!(clash),
            Intersection::NonTransverse => prop_assert!(!clash && either < 6),
            Intersection::Transverse(t) => {
                prop_assert!(!clash && either == 6);
                prop_assert_eq!(t.dimension(), both);
                prop_assert_eq!(a.dimension() + b.dimension(), 6 + both);
            }
        }
    }
}

#[test]
fn cycle_matrix_rank_matches_rational_elimination() {
    let m = cycle_intersection_matrix().unwrap();
    assert_eq!((m.rows(), m.cols()), (10, 16));
    assert_eq!(rank_over_q(&m.to_rows()), 10);
    assert_eq!(snf(&m).rank(), 10);
}

#[test]
fn essential_tori_meet_catalog_transversely() {
    for w in essential_three_tori() {
        for e in embedded_tori() {
            assert!(!matches!(intersect(&w, e.torus()), Intersection::NonTransverse), "{w} vs {}", e.name());
        }
    }
}

#[test]
fn invariant_factor_groups_agree_with_cyclic_orders() {
    let orders: Vec<BigInt> = [4, 6, 10, 0].iter().map(|&n| BigInt::from(n)).collect();
    let g = AbelianGroup::from_cyclic_orders(1, &orders);
    assert_eq!(g.rank(), 2);
    assert_eq!(g.torsion(), &[BigInt::from(2), BigInt::from(2), BigInt::from(60)]);
}
