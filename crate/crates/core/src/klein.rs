//! Plücker and Klein coordinates for lines in P³, the sign-character action
//! of the group on Klein vectors, the orbit-swapping involution, the line
//! condition cut out by the quintic locus, and the 48 lines on the Fermat
//! quartic with their intersection Gram matrix.
//!
//! Plücker order is (p₀₁, p₀₂, p₀₃, p₁₂, p₁₃, p₂₃) with p_ij = aᵢb_j − a_jbᵢ.
//! Klein coordinates diagonalize the Plücker quadric: Σxᵢ² = −4·(Plücker
//! relation), so valid lines satisfy Σxᵢ² = 0.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::heisenberg::{Label, Mat4};
use crate::linalg::Mat;
use crate::mpoly::{restrict_to_line, MPoly};
use crate::tower::{FieldElement, Rat, Tower};

pub type Vec6 = [FieldElement; 6];

/// p_ij = aᵢb_j − a_jbᵢ in the order (01, 02, 03, 12, 13, 23).
pub fn plucker_from_points(a: &[FieldElement], b: &[FieldElement]) -> Vec6 {
    assert_eq!(a.len(), 4);
    assert_eq!(b.len(), 4);
    let p = |i: usize, j: usize| a[i].mul(&b[j]).sub(&a[j].mul(&b[i]));
    let out = [p(0, 1), p(0, 2), p(0, 3), p(1, 2), p(1, 3), p(2, 3)];
    assert!(
        out.iter().any(|c| !c.is_zero()),
        "spanning points must be independent"
    );
    out
}

/// p₀₁p₂₃ − p₀₂p₁₃ + p₀₃p₁₂; zero exactly for decomposable vectors.
pub fn plucker_relation(p: &Vec6) -> FieldElement {
    p[0].mul(&p[5]).sub(&p[1].mul(&p[4])).add(&p[2].mul(&p[3]))
}

fn require_i(tower: &Arc<Tower>) -> (Arc<Tower>, FieldElement) {
    let gaussian = Tower::gaussian();
    let t = if gaussian.is_prefix_of(tower) {
        tower.clone()
    } else {
        assert!(
            Tower::rationals().is_prefix_of(tower) && tower.height() == 0,
            "Klein coordinates need i as the first tower generator"
        );
        gaussian
    };
    let i = t.generator(0);
    (t, i)
}

/// x₀ = p₀₁−p₂₃, x₁ = i(p₀₁+p₂₃), x₂ = p₀₂+p₁₃, x₃ = i(p₀₂−p₁₃),
/// x₄ = p₀₃−p₁₂, x₅ = i(p₀₃+p₁₂).
pub fn klein_from_plucker(p: &Vec6) -> Vec6 {
    let (_, i) = require_i(p[0].tower());
    [
        p[0].sub(&p[5]),
        i.mul(&p[0].add(&p[5])),
        p[1].add(&p[4]),
        i.mul(&p[1].sub(&p[4])),
        p[2].sub(&p[3]),
        i.mul(&p[2].add(&p[3])),
    ]
}

/// Inverse of [`klein_from_plucker`] (exact, not just projective).
pub fn plucker_from_klein(x: &Vec6) -> Vec6 {
    let (t, i) = require_i(x[0].tower());
    let half = t.from_rat(crate::tower::ratio(1, 2));
    let ix = |k: usize| i.mul(&x[k]);
    [
        x[0].sub(&ix(1)).mul(&half),            // p01
        x[2].sub(&ix(3)).mul(&half),            // p02
        x[4].sub(&ix(5)).mul(&half),            // p03
        x[4].neg().sub(&ix(5)).mul(&half),      // p12
        x[2].add(&ix(3)).mul(&half),            // p13
        x[0].neg().sub(&ix(1)).mul(&half),      // p23
    ]
}

pub fn sum_of_squares(x: &Vec6) -> FieldElement {
    let mut acc = x[0].tower().zero();
    for c in x {
        acc = acc.add(&c.square());
    }
    acc
}

/// Clears denominators, removes integer content, and fixes the sign so the
/// first nonzero rational coordinate (in order) is positive.
pub fn klein_normalize(x: &Vec6) -> Vec6 {
    let mut den_lcm = BigInt::one();
    let mut num_gcd = BigInt::zero();
    for e in x.iter() {
        for r in e.coords() {
            if r.is_zero() {
                continue;
            }
            den_lcm = den_lcm.lcm(r.denom());
            num_gcd = num_gcd.gcd(r.numer());
        }
    }
    assert!(!num_gcd.is_zero(), "zero Klein vector");
    let mut scale = Rat::new(den_lcm, num_gcd);
    let lead = x
        .iter()
        .flat_map(|e| e.coords())
        .find(|r| !r.is_zero())
        .unwrap();
    if (lead * &scale).is_negative() {
        scale = -scale;
    }
    let out: Vec<FieldElement> = x.iter().map(|e| e.mul_rat(&scale)).collect();
    out.try_into().unwrap()
}

/// Canonical Klein vector of the line through two points.
pub fn klein_from_points(a: &[FieldElement], b: &[FieldElement]) -> Vec6 {
    klein_normalize(&klein_from_plucker(&plucker_from_points(a, b)))
}

/// Two lines meet iff Σxᵢyᵢ = 0 in Klein coordinates.
pub fn coplanar(x: &Vec6, y: &Vec6) -> bool {
    let mut acc = x[0].tower().zero();
    for (a, b) in x.iter().zip(y) {
        acc = acc.add(&a.mul(b));
    }
    acc.is_zero()
}

/// Rank oracle: lines span(a₁,b₁) and span(a₂,b₂) meet iff the four points
/// are linearly dependent.
pub fn coplanar_rank_oracle(
    a1: &[FieldElement],
    b1: &[FieldElement],
    a2: &[FieldElement],
    b2: &[FieldElement],
) -> bool {
    let tower = a1[0].tower().clone();
    let m = Mat::from_rows(
        &tower,
        vec![a1.to_vec(), b1.to_vec(), a2.to_vec(), b2.to_vec()],
    );
    m.rank() < 4
}

/// Generator rows of the sign action on Klein coordinates:
/// σ₁, σ₂, τ₁, τ₂ in label order 8, 4, 2, 1.
const SIGN_ROWS: [(Label, [i8; 6]); 4] = [
    (8, [-1, 1, -1, -1, 1, -1]),
    (4, [-1, -1, 1, -1, -1, 1]),
    (2, [1, 1, -1, -1, -1, -1]),
    (1, [-1, -1, 1, 1, -1, -1]),
];

/// The multiplicative extension of the generator sign rows to all of H.
pub fn sign_character(g: Label) -> [i8; 6] {
    assert!(g < 16);
    let mut eps = [1i8; 6];
    for (bit, row) in SIGN_ROWS {
        if g & bit != 0 {
            for k in 0..6 {
                eps[k] *= row[k];
            }
        }
    }
    eps
}

pub fn apply_sign(x: &Vec6, g: Label) -> Vec6 {
    let eps = sign_character(g);
    let out: Vec<FieldElement> = x
        .iter()
        .zip(eps)
        .map(|(c, e)| if e > 0 { c.clone() } else { c.neg() })
        .collect();
    out.try_into().unwrap()
}

/// Transports two spanning points by a group matrix.
pub fn transport_points(m: &Mat4, p: &[FieldElement]) -> Vec<FieldElement> {
    let t = p[0].tower().clone();
    (0..4)
        .map(|r| {
            let mut acc = t.zero();
            for c in 0..4 {
                if m[r][c] != 0 {
                    acc = acc.add(&p[c].mul_rat(&crate::tower::rat(m[r][c])));
                }
            }
            acc
        })
        .collect()
}

/// Projective equality of Klein vectors (both already normalized or not).
pub fn projectively_equal(x: &Vec6, y: &Vec6) -> bool {
    let ix = x.iter().position(|c| !c.is_zero());
    let iy = y.iter().position(|c| !c.is_zero());
    if ix != iy {
        return false;
    }
    let Some(k) = ix else {
        return true;
    };
    // cross-multiply: xᵢ·y_k = yᵢ·x_k for all i
    (0..6).all(|i| x[i].mul(&y[k]) == y[i].mul(&x[k]))
}

/// (−1/x₀, 1/x₁, …, 1/x₅) cleared by Πxᵢ: coordinate k of the image is
/// ±Π_{j≠k} x_j. Defined when all coordinates are nonzero.
pub fn involution(x: &Vec6) -> Vec6 {
    assert!(
        x.iter().all(|c| !c.is_zero()),
        "involution needs all Klein coordinates nonzero"
    );
    let out: Vec<FieldElement> = (0..6)
        .map(|k| {
            let mut prod = x[0].tower().one();
            for (j, c) in x.iter().enumerate() {
                if j != k {
                    prod = prod.mul(c);
                }
            }
            if k == 0 {
                prod.neg()
            } else {
                prod
            }
        })
        .collect();
    out.try_into().unwrap()
}

/// The degree-10 cleared line condition Σᵢ Π_{j≠i} x_j².
pub fn nieto_line_condition(x: &Vec6) -> FieldElement {
    let squares: Vec<FieldElement> = x.iter().map(FieldElement::square).collect();
    let mut acc = x[0].tower().zero();
    for i in 0..6 {
        let mut prod = x[0].tower().one();
        for (j, s) in squares.iter().enumerate() {
            if j != i {
                prod = prod.mul(s);
            }
        }
        acc = acc.add(&prod);
    }
    acc
}

/// True if the quartic vanishes identically on the line span(a, b).
pub fn line_on_surface(f: &MPoly, a: &[FieldElement], b: &[FieldElement]) -> bool {
    restrict_to_line(f, a, b).is_zero()
}

/// A line on the Fermat quartic, stored by its two spanning points over
/// Q(i, √2).
#[derive(Debug, Clone)]
pub struct FermatLine {
    pub span: [Vec<FieldElement>; 2],
    pub klein: Vec6,
}

/// The 48 lines: for each of the three coordinate pairings, points
/// (1,α,0,0)–(0,0,1,β) and its analogues with α⁴ = β⁴ = −1.
pub fn fermat_lines() -> Vec<FermatLine> {
    let t = Tower::gaussian_sqrt2();
    let i = t.generator(0);
    let s2 = t.generator(1);
    let zeta = t.one().add(&i).div(&s2).unwrap(); // primitive eighth root of unity
    let roots: Vec<FieldElement> = (0..4).map(|k| zeta.mul(&i.pow(k))).collect();
    let zero = t.zero();
    let one = t.one();
    let mut lines = Vec::with_capacity(48);
    // pairings: (x↔y, z↔w), (x↔z, y↔w), (x↔w, y↔z)
    let placements: [([usize; 2], [usize; 2]); 3] = [([0, 1], [2, 3]), ([0, 2], [1, 3]), ([0, 3], [1, 2])];
    for (first, second) in placements {
        for alpha in &roots {
            for beta in &roots {
                let mut a = vec![zero.clone(), zero.clone(), zero.clone(), zero.clone()];
                let mut b = a.clone();
                a[first[0]] = one.clone();
                a[first[1]] = alpha.clone();
                b[second[0]] = one.clone();
                b[second[1]] = beta.clone();
                let klein = klein_from_points(&a, &b);
                lines.push(FermatLine { span: [a, b], klein });
            }
        }
    }
    lines
}

/// Intersection Gram matrix of a set of lines on a smooth quartic:
/// self-intersection −2, meeting lines 1, skew lines 0.
pub fn line_gram(lines: &[FermatLine]) -> Vec<Vec<i64>> {
    let n = lines.len();
    let mut g = vec![vec![0i64; n]; n];
    for a in 0..n {
        g[a][a] = -2;
        for b in (a + 1)..n {
            let v = i64::from(coplanar(&lines[a].klein, &lines[b].klein));
            g[a][b] = v;
            g[b][a] = v;
        }
    }
    g
}

pub fn integer_matrix_rank(m: &[Vec<i64>]) -> usize {
    let t = Tower::rationals();
    Mat::from_i64_rows(&t, m).rank()
}
