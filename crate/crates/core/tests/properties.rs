//! Randomized structural properties: field axioms in quadratic towers,
//! restriction homomorphisms, determinant expansion independence, Plücker
//! roundtrips, and lattice index/discriminant identities.

use hquartic::heisenberg::gaussian;
use hquartic::klein;
use hquartic::lattice;
use hquartic::linalg::Mat;
use hquartic::mpoly::{poly_det4, restrict_to_plane, MPoly, Mono};
use hquartic::tower::{ratio, FieldElement, Rat, Tower};
use num_bigint::BigInt;
use proptest::prelude::*;
use std::sync::Arc;

fn small_rat() -> impl Strategy<Value = Rat> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| ratio(n, d))
}

fn gaussian_elem() -> impl Strategy<Value = FieldElement> {
    (small_rat(), small_rat()).prop_map(|(a, b)| {
        let t = gaussian();
        t.from_coords(vec![a, b])
    })
}

fn sqrt5_tower() -> Arc<Tower> {
    let q = Tower::rationals();
    q.extend(&q.from_i64(5)).unwrap()
}

fn sqrt5_elem() -> impl Strategy<Value = FieldElement> {
    (small_rat(), small_rat()).prop_map(|(a, b)| sqrt5_tower().from_coords(vec![a, b]))
}

fn point4() -> impl Strategy<Value = Vec<FieldElement>> {
    proptest::collection::vec(gaussian_elem(), 4)
}

fn quartic_mono() -> impl Strategy<Value = Mono> {
    (0u16..=2, 0u16..=2, 0u16..=2, 0u16..=2).prop_map(|(a, b, c, d)| Mono::new(vec![a, b, c, d]))
}

fn small_poly() -> impl Strategy<Value = MPoly> {
    proptest::collection::vec((quartic_mono(), small_rat()), 1..5).prop_map(|terms| {
        let t = Tower::rationals();
        let mut f = MPoly::zero(4, &t);
        for (m, c) in terms {
            f.add_term(m, t.from_rat(c));
        }
        f
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn gaussian_field_axioms(a in gaussian_elem(), b in gaussian_elem(), c in gaussian_elem()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        if !a.is_zero() {
            let inv = a.inv().unwrap();
            prop_assert!(a.mul(&inv).sub(&a.tower().one()).is_zero());
        }
    }

    #[test]
    fn sqrt5_squares_have_roots(a in sqrt5_elem()) {
        let sq = a.square();
        let root = sq.sqrt().expect("squares admit square roots");
        prop_assert_eq!(root.square(), sq);
        // the returned root is sign-normalized, so roots of equal squares agree
        prop_assert_eq!(a.neg().square().sqrt().unwrap(), root);
    }

    #[test]
    fn restriction_is_a_ring_map(f in small_poly(), g in small_poly()) {
        let t = Tower::rationals();
        let plane: Vec<FieldElement> = vec![t.from_i64(1), t.from_i64(-2), t.from_i64(3), t.from_i64(-1)];
        let lhs = restrict_to_plane(&f.mul(&g), &plane);
        let rhs = restrict_to_plane(&f, &plane).mul(&restrict_to_plane(&g, &plane));
        prop_assert_eq!(lhs, rhs);
        let sum = restrict_to_plane(&f.add(&g), &plane);
        let sum2 = restrict_to_plane(&f, &plane).add(&restrict_to_plane(&g, &plane));
        prop_assert_eq!(sum, sum2);
    }

    #[test]
    fn det4_independent_of_expansion_row(rows in proptest::collection::vec(proptest::collection::vec(small_poly(), 4), 4)) {
        let m: Vec<Vec<MPoly>> = rows;
        let d0 = poly_det4(&m, 0);
        for row in 1..4 {
            prop_assert_eq!(poly_det4(&m, row), d0.clone());
        }
    }

    #[test]
    fn plucker_roundtrip_and_coplanarity(a in point4(), b in point4(), c in point4(), d in point4()) {
        let t = gaussian();
        let rank_ab = Mat::from_rows(&t, vec![a.clone(), b.clone()]).rank();
        let rank_cd = Mat::from_rows(&t, vec![c.clone(), d.clone()]).rank();
        prop_assume!(rank_ab == 2 && rank_cd == 2);
        let x = klein::klein_from_points(&a, &b);
        prop_assert!(klein::sum_of_squares(&x).is_zero());
        let y = klein::klein_from_points(&c, &d);
        let all = Mat::from_rows(&t, vec![a, b, c, d]);
        let expected = all.rank() < 4;
        prop_assert_eq!(klein::coplanar(&x, &y), expected);
    }

    #[test]
    fn index_squared_is_disc_ratio(
        d1 in 1i64..=3, d2 in 1i64..=3, d3 in 1i64..=3,
        a in -3i64..=3, b in -3i64..=3, c in -3i64..=3,
    ) {
        let l = lattice::GramLattice::from_i64(&[vec![2, 1, 0], vec![1, 2, 1], vec![0, 1, 4]]);
        let t = vec![
            vec![BigInt::from(d1), BigInt::from(a), BigInt::from(b)],
            vec![BigInt::from(0), BigInt::from(d2), BigInt::from(c)],
            vec![BigInt::from(0), BigInt::from(0), BigInt::from(d3)],
        ];
        let idx = lattice::sublattice_index(&l, &t).unwrap();
        prop_assert_eq!(idx, BigInt::from(d1 * d2 * d3));
    }

    #[test]
    fn signature_stable_under_elementary_moves(
        i in 0usize..16, j in 0usize..16, c in -2i64..=2,
    ) {
        prop_assume!(i != j);
        let base = lattice::conic16_lattice().gram;
        let n = base.len();
        let mut t: Vec<Vec<BigInt>> = (0..n)
            .map(|r| (0..n).map(|s| BigInt::from(i64::from(r == s))).collect())
            .collect();
        for k in 0..n {
            let add = BigInt::from(c) * &t[j][k];
            t[i][k] += add;
        }
        let mut conj = vec![vec![BigInt::from(0); n]; n];
        for r in 0..n {
            for s in 0..n {
                conj[r][s] = lattice::product_of(&base, &t[r], &t[s]);
            }
        }
        prop_assert_eq!(lattice::signature(&conj).unwrap(), (1, 15));
        prop_assert_eq!(lattice::det_exact(&conj), lattice::det_exact(&base));
    }
}
