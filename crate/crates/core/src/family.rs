//! The parameter space of invariant quartics: the g- and t-bases, the
//! (A,B,C,D,E) ↔ u coordinate changes, the S₆ action and its special orbits,
//! the singularity discriminant, Segre/Nieto membership, the Igusa map, and
//! Hessian surfaces.
//!
//! Parameters u = (u₀,…,u₅) live on U = {Σuᵢ = 0} ⊂ P⁵ and pick out the
//! quartic F_u = Σ tᵢuᵢ; λ = (A,B,C,D,E) picks out F_λ = Σ λᵢgᵢ. The two
//! charts are identified by a pair of linear maps whose composite is 4·id.

use std::collections::BTreeSet;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::Mat;
use crate::mpoly::{poly_det4, MPoly, Mono};
use crate::tower::{rat, ratio, Rat, Tower};

/// g₀ = x⁴+y⁴+z⁴+w⁴, g₁ = 2(x²y²+z²w²), g₂ = 2(x²z²+y²w²),
/// g₃ = 2(x²w²+y²z²), g₄ = 4xyzw.
pub fn g_basis() -> [MPoly; 5] {
    let t = Tower::rationals();
    [
        MPoly::from_int_terms(
            4,
            &t,
            &[(&[4, 0, 0, 0], 1), (&[0, 4, 0, 0], 1), (&[0, 0, 4, 0], 1), (&[0, 0, 0, 4], 1)],
        ),
        MPoly::from_int_terms(4, &t, &[(&[2, 2, 0, 0], 2), (&[0, 0, 2, 2], 2)]),
        MPoly::from_int_terms(4, &t, &[(&[2, 0, 2, 0], 2), (&[0, 2, 0, 2], 2)]),
        MPoly::from_int_terms(4, &t, &[(&[2, 0, 0, 2], 2), (&[0, 2, 2, 0], 2)]),
        MPoly::from_int_terms(4, &t, &[(&[1, 1, 1, 1], 4)]),
    ]
}

/// The six tᵢ with Σtᵢ = 0, expressed over the g-basis.
pub fn t_basis() -> [MPoly; 6] {
    let [g0, g1, g2, g3, g4] = g_basis();
    let third = ratio(1, 3);
    let t0 = g0.mul_rat(&third).sub(&g1).sub(&g2).sub(&g3);
    let t1 = g0.mul_rat(&third).sub(&g1).add(&g2).add(&g3);
    let t2 = g0.mul_rat(&third).add(&g1).sub(&g2).add(&g3);
    let t3 = g0.mul_rat(&third).add(&g1).add(&g2).sub(&g3);
    let t4 = g0.mul_rat(&ratio(-2, 3)).add(&g4.mul_rat(&rat(2)));
    let t5 = g0.mul_rat(&ratio(-2, 3)).sub(&g4.mul_rat(&rat(2)));
    [t0, t1, t2, t3, t4, t5]
}

pub fn f_lambda(lambda: &[Rat; 5]) -> MPoly {
    let g = g_basis();
    let mut f = MPoly::zero(4, &Tower::rationals());
    for (gi, c) in g.iter().zip(lambda) {
        f = f.add(&gi.mul_rat(c));
    }
    f
}

pub fn f_u(u: &[Rat; 6]) -> MPoly {
    assert!(on_u_hyperplane(u), "parameter must satisfy Σuᵢ = 0");
    let t = t_basis();
    let mut f = MPoly::zero(4, &Tower::rationals());
    for (ti, c) in t.iter().zip(u) {
        f = f.add(&ti.mul_rat(c));
    }
    f
}

pub fn on_u_hyperplane(u: &[Rat; 6]) -> bool {
    u.iter().sum::<Rat>().is_zero()
}

pub fn u_to_abcde(u: &[Rat; 6]) -> [Rat; 5] {
    [
        -&u[4] - &u[5],
        -&u[0] - &u[1] + &u[2] + &u[3],
        -&u[0] + &u[1] - &u[2] + &u[3],
        -&u[0] + &u[1] + &u[2] - &u[3],
        (&u[4] - &u[5]) * rat(2),
    ]
}

pub fn abcde_to_u(l: &[Rat; 5]) -> [Rat; 6] {
    let [a, b, c, d, e] = l;
    [
        a - b - c - d,
        a - b + c + d,
        a + b - c + d,
        a + b + c - d,
        -(a * rat(2)) + e,
        -(a * rat(2)) - e,
    ]
}

pub fn u_from_i64(u: [i64; 6]) -> [Rat; 6] {
    u.map(rat)
}

/// σ sends u to (u_{σ(0)},…,u_{σ(5)}).
pub fn s6_apply(perm: &[usize; 6], u: &[Rat; 6]) -> [Rat; 6] {
    std::array::from_fn(|i| u[perm[i]].clone())
}

fn permutations6() -> Vec<[usize; 6]> {
    let mut out = Vec::with_capacity(720);
    let mut items = [0, 1, 2, 3, 4, 5];
    fn heap(k: usize, items: &mut [usize; 6], out: &mut Vec<[usize; 6]>) {
        if k == 1 {
            out.push(*items);
            return;
        }
        for i in 0..k {
            heap(k - 1, items, out);
            if k % 2 == 0 {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
    heap(6, &mut items, &mut out);
    out
}

/// Scales so the first nonzero coordinate is 1.
pub fn normalize_projective(v: &[Rat]) -> Vec<Rat> {
    let lead = v.iter().find(|c| !c.is_zero()).expect("zero vector");
    v.iter().map(|c| c / lead).collect()
}

/// The S₆-orbit of u as a sorted set of normalized tuples.
pub fn s6_orbit(u: &[Rat; 6]) -> BTreeSet<Vec<Rat>> {
    permutations6()
        .iter()
        .map(|p| normalize_projective(&s6_apply(p, u)))
        .collect()
}

/// The 10 nodes of the Segre cubic: orbit of (1,1,1,−1,−1,−1).
pub fn segre_nodes() -> Vec<[Rat; 6]> {
    orbit_as_params(&u_from_i64([1, 1, 1, -1, -1, -1]))
}

/// The 15 tetrahedral points: orbit of (1,−1,0,0,0,0).
pub fn t_points() -> Vec<[Rat; 6]> {
    orbit_as_params(&u_from_i64([1, -1, 0, 0, 0, 0]))
}

fn orbit_as_params(u: &[Rat; 6]) -> Vec<[Rat; 6]> {
    s6_orbit(u)
        .into_iter()
        .map(|v| {
            let arr: [Rat; 6] = v.try_into().unwrap();
            arr
        })
        .collect()
}

/// (Σuᵢ³)·Π_{i<j}(uᵢ+u_j); zero exactly on the singular members.
pub fn singular_discriminant(u: &[Rat; 6]) -> Rat {
    let mut acc = segre_value(u);
    for i in 0..6 {
        for j in (i + 1)..6 {
            acc *= &u[i] + &u[j];
        }
    }
    acc
}

pub fn segre_value(u: &[Rat; 6]) -> Rat {
    u.iter().map(|x| x * x * x).sum()
}

pub fn segre_membership(u: &[Rat; 6]) -> bool {
    segre_value(u).is_zero()
}

/// The degree-5 cleared form Σᵢ Π_{j≠i} u_j of the Nieto quintic.
pub fn nieto_value(u: &[Rat; 6]) -> Rat {
    (0..6)
        .map(|i| {
            (0..6)
                .filter(|&j| j != i)
                .map(|j| u[j].clone())
                .product::<Rat>()
        })
        .sum()
}

pub fn nieto_membership(u: &[Rat; 6]) -> bool {
    nieto_value(u).is_zero()
}

/// α(p) = (g₀(p),…,g₄(p)).
pub fn igusa_map(p: &[Rat; 4]) -> [Rat; 5] {
    let t = Tower::rationals();
    let pt: Vec<_> = p.iter().map(|c| t.from_rat(c.clone())).collect();
    let vals = g_basis().map(|g| g.eval(&pt).as_rat().unwrap().clone());
    assert!(
        vals.iter().any(|v| !v.is_zero()),
        "the quartic system is base-point-free"
    );
    vals
}

pub fn monomials_deg(nvars: usize, deg: u16) -> Vec<Vec<u16>> {
    let mut out = Vec::new();
    let mut cur = vec![0u16; nvars];
    fn rec(i: usize, left: u16, cur: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(cur.clone());
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
    }
    rec(0, deg, &mut cur, &mut out);
    out
}

/// The unique (up to scale) quartic relation among g₀..g₄, found by exact
/// interpolation at random rational points. Panics if the kernel dimension
/// is not 1. Result is integer-primitive with positive leading coefficient.
pub fn igusa_relation(seed: u64) -> MPoly {
    let t = Tower::rationals();
    let monos = monomials_deg(5, 4);
    assert_eq!(monos.len(), 70);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::new();
    let mut wanted = 85;
    // every sampled row annihilates the true relation, so the kernel never
    // drops below dimension 1; sample until it shrinks to exactly 1
    let kernel = loop {
        while rows.len() < wanted {
            let p: [Rat; 4] = std::array::from_fn(|_| rat(rng.gen_range(-4..=4)));
            if p.iter().all(Rat::is_zero) {
                continue;
            }
            let a = igusa_map(&p);
            let row: Vec<_> = monos
                .iter()
                .map(|m| {
                    let mut v = Rat::from_integer(1.into());
                    for (e, x) in m.iter().zip(&a) {
                        for _ in 0..*e {
                            v *= x;
                        }
                    }
                    t.from_rat(v)
                })
                .collect();
            rows.push(row);
        }
        let kernel = Mat::from_rows(&t, rows.clone()).kernel();
        if kernel.len() == 1 {
            break kernel;
        }
        assert!(wanted < 400, "interpolation points stay degenerate");
        wanted += 15;
    };
    let mut rel = MPoly::zero(5, &t);
    for (m, c) in monos.into_iter().zip(&kernel[0]) {
        rel.add_term(Mono::new(m), c.clone());
    }
    rel.primitive_integer()
}

/// Determinant of the 4×4 matrix of second partials.
pub fn hessian(f: &MPoly) -> MPoly {
    assert_eq!(f.nvars(), 4);
    let rows: Vec<Vec<MPoly>> = (0..4)
        .map(|i| (0..4).map(|j| f.partial(i).partial(j)).collect())
        .collect();
    poly_det4(&rows, 0)
}

/// True if f = c·g for a nonzero scalar c (f, g both nonzero).
pub fn proportional(f: &MPoly, g: &MPoly) -> bool {
    if f.is_zero() || g.is_zero() {
        return false;
    }
    let (mf, cf) = f.leading().unwrap();
    let (mg, cg) = g.leading().unwrap();
    if mf != mg {
        return false;
    }
    f.mul_elem(cg) == g.mul_elem(cf)
}

/// Finds the t-orbit parameter (if any) whose quartic is proportional to f.
pub fn match_t_point(f: &MPoly) -> Option<[Rat; 6]> {
    t_points().into_iter().find(|u| proportional(f, &f_u(u)))
}

/// Finds the Segre node (if any) whose quartic is proportional to f.
pub fn match_segre_node(f: &MPoly) -> Option<[Rat; 6]> {
    segre_nodes().into_iter().find(|u| proportional(f, &f_u(u)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heisenberg::{lift, transform_poly_mat};

    #[test]
    fn t_basis_relations() {
        let t = t_basis();
        let mut sum = MPoly::zero(4, &Tower::rationals());
        for ti in &t {
            sum = sum.add(ti);
        }
        assert!(sum.is_zero());
        let [_, _, _, _, g4] = g_basis();
        assert_eq!(t[4].sub(&t[5]), g4.mul_rat(&rat(4)));
        assert_eq!(
            g4,
            MPoly::from_int_terms(4, &Tower::rationals(), &[(&[1, 1, 1, 1], 4)])
        );
    }

    #[test]
    fn parameter_roundtrip_is_4id() {
        // on a basis of U, which proves the identity as linear maps
        let basis: [[i64; 6]; 5] = [
            [1, 0, 0, 0, 0, -1],
            [0, 1, 0, 0, 0, -1],
            [0, 0, 1, 0, 0, -1],
            [0, 0, 0, 1, 0, -1],
            [0, 0, 0, 0, 1, -1],
        ];
        for b in basis {
            let u = u_from_i64(b);
            let back = abcde_to_u(&u_to_abcde(&u));
            for i in 0..6 {
                assert_eq!(back[i], &u[i] * rat(4));
            }
        }
    }

    #[test]
    fn fermat_parameter() {
        let u = abcde_to_u(&[rat(1), rat(0), rat(0), rat(0), rat(0)]);
        assert_eq!(u, u_from_i64([1, 1, 1, 1, -2, -2]));
        // and the basis identity F_{u(λ)} = 4·F_λ
        let lambda = [rat(3), rat(-1), rat(2), rat(5), rat(7)];
        let u2 = abcde_to_u(&lambda);
        assert_eq!(f_u(&u2), f_lambda(&lambda).mul_rat(&rat(4)));
    }

    #[test]
    fn t0_quartic() {
        let f = f_u(&u_from_i64([1, -1, 0, 0, 0, 0]));
        let [_, _, g2, g3, _] = g_basis();
        assert_eq!(f, g2.add(&g3).mul_rat(&rat(-2)));
    }

    #[test]
    fn invariance_under_generators() {
        let u = u_from_i64([1, 2, 3, 5, 7, -18]);
        let f = f_u(&u);
        for g in [8u8, 4, 2, 1] {
            assert_eq!(transform_poly_mat(&f, &lift(g)), f);
        }
    }

    #[test]
    fn orbit_sizes() {
        assert_eq!(segre_nodes().len(), 10);
        assert_eq!(t_points().len(), 15);
        let id = [0, 1, 2, 3, 4, 5];
        let u = u_from_i64([1, 2, 3, 5, 7, -18]);
        assert_eq!(s6_apply(&id, &u), u);
    }

    #[test]
    fn discriminant_values() {
        // Fermat is smooth
        let fermat = u_from_i64([1, 1, 1, 1, -2, -2]);
        assert!(!singular_discriminant(&fermat).is_zero());
        // a vanishing pair factor
        let u = u_from_i64([1, -1, 2, 3, 4, -9]);
        assert!(singular_discriminant(&u).is_zero());
        // sample smooth member used elsewhere
        let s = u_from_i64([1, 2, 3, 5, 7, -18]);
        assert!(!singular_discriminant(&s).is_zero());
    }

    #[test]
    fn segre_and_nieto_membership() {
        let q0 = u_from_i64([1, 1, 1, -1, -1, -1]);
        let t0 = u_from_i64([1, -1, 0, 0, 0, 0]);
        assert!(segre_membership(&q0));
        assert!(segre_membership(&t0));
        assert!(nieto_membership(&q0));
        let fermat = u_from_i64([1, 1, 1, 1, -2, -2]);
        assert!(!segre_membership(&fermat));
    }

    #[test]
    fn igusa_orbit_constancy() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..5 {
            let ints: [i64; 4] = std::array::from_fn(|_| rng.gen_range(-9..=9));
            if ints == [0; 4] {
                continue;
            }
            let base = igusa_map(&ints.map(rat));
            for g in 0..16u8 {
                let gp = crate::heisenberg::mat4_apply(&lift(g), &ints);
                assert_eq!(igusa_map(&gp.map(rat)), base, "α must be constant on orbits");
            }
        }
        assert_eq!(
            igusa_map(&[rat(1), rat(0), rat(0), rat(0)]),
            [rat(1), rat(0), rat(0), rat(0), rat(0)]
        );
    }

    #[test]
    fn igusa_relation_interpolates() {
        let rel = igusa_relation(11);
        assert_eq!(rel.degree(), Some(4));
        // vanishes on the image of α at fresh points
        let t = Tower::rationals();
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..20 {
            let p: [Rat; 4] = std::array::from_fn(|_| rat(rng.gen_range(-9..=9)));
            if p.iter().all(Rat::is_zero) {
                continue;
            }
            let a = igusa_map(&p).map(|v| t.from_rat(v));
            assert!(rel.eval(&a).is_zero());
        }
        // independent of the sampling seed up to normalization
        assert_eq!(rel, igusa_relation(12345));
    }

    #[test]
    fn hessian_of_fermat_and_axes() {
        let [g0, g1, g2, g3, g4] = g_basis();
        let t = Tower::rationals();
        let sq = MPoly::from_int_terms(4, &t, &[(&[2, 2, 2, 2], 1)]);
        assert_eq!(hessian(&g0), sq.mul_rat(&rat(20736)));
        for gi in [&g1, &g2, &g3] {
            assert_eq!(hessian(gi), sq.mul_rat(&rat(2304)));
        }
        assert_eq!(hessian(&g4), sq.mul_rat(&rat(-768)));
    }

    #[test]
    fn b_axis_splits_over_gaussian() {
        let [_, g1, _, _, _] = g_basis();
        let qi = Tower::gaussian();
        let i = qi.generator(0);
        let xy = MPoly::from_int_terms(4, &qi, &[(&[1, 1, 0, 0], 1)]);
        let zw = MPoly::from_int_terms(4, &qi, &[(&[0, 0, 1, 1], 1)]);
        let f1 = xy.add(&zw.mul_elem(&i));
        let f2 = xy.sub(&zw.mul_elem(&i));
        assert_eq!(f1.mul(&f2).mul_rat(&rat(2)), g1);
    }

    #[test]
    fn hessian_covariance() {
        let u = u_from_i64([1, 2, 3, 5, 7, -18]);
        let f = f_u(&u);
        for g in [8u8, 4, 2, 1] {
            let m = lift(g);
            let lhs = hessian(&transform_poly_mat(&f, &m));
            let rhs = transform_poly_mat(&hessian(&f), &m);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn proportionality_matching() {
        let u = u_from_i64([0, 0, 0, 0, 1, -1]);
        let f = f_u(&u).mul_rat(&ratio(3, 7));
        let hit = match_t_point(&f).expect("xyzw quartic is a tetrahedron member");
        assert_eq!(normalize_projective(&hit), normalize_projective(&u));
        assert!(match_segre_node(&f).is_none());
    }
}
