//! Combinatorial intersection theory of the 320 conics on a quartic with two
//! 16-line orbits: the balanced-sign incidence set, the 160 reducible conics
//! and their Gram matrix, the full 321×321 Gram with the hyperplane class,
//! orbit intersection statistics, and the distinguished 16×16 submatrix of
//! determinant −512.

use crate::heisenberg::Label;
use crate::klein::sign_character;
use crate::linalg::Mat;
use crate::tower::Tower;

/// Weight of each Klein coordinate in the incidence criterion; the minus on
/// coordinate 0 is the involution's sign there.
const INVOLUTION_WEIGHT: [i8; 6] = [-1, 1, 1, 1, 1, 1];

/// Labels g for which a generic line meets the g-translate of its involution
/// image: the weighted sign sum Σ tᵢ εᵢ(g) vanishes. Always 10 elements.
pub fn incidence_set() -> Vec<Label> {
    let s: Vec<Label> = (0..16)
        .filter(|&g| {
            let eps = sign_character(g);
            let sum: i8 = (0..6).map(|i| INVOLUTION_WEIGHT[i] * eps[i]).sum();
            sum == 0
        })
        .collect();
    assert_eq!(s.len(), 10, "incidence set size is forced by the sign table");
    s
}

fn membership_table() -> [bool; 16] {
    let mut t = [false; 16];
    for g in incidence_set() {
        t[g as usize] = true;
    }
    t
}

/// inc(k) = 1 if k is in the incidence set, else 0.
pub fn inc(k: Label) -> i64 {
    i64::from(membership_table()[k as usize])
}

/// The 160 reducible conics as ordered pairs (a, b): line a in the first
/// orbit plus line b in the second, meeting exactly when a xor b is in the
/// incidence set. Ordered a-major, then b; ordinals are 1-based.
pub fn reducible_conics() -> Vec<(Label, Label)> {
    let member = membership_table();
    let mut out = Vec::with_capacity(160);
    for a in 0..16u8 {
        for b in 0..16u8 {
            if member[(a ^ b) as usize] {
                out.push((a, b));
            }
        }
    }
    assert_eq!(out.len(), 160);
    out
}

fn gram_entry(member: &[bool; 16], p: (Label, Label), q: (Label, Label)) -> i64 {
    let (a, b) = p;
    let (a2, b2) = q;
    let mut n = 0i64;
    if a == a2 {
        n -= 2;
    }
    if b == b2 {
        n -= 2;
    }
    n += i64::from(member[(a ^ b2) as usize]);
    n += i64::from(member[(a2 ^ b) as usize]);
    n
}

/// 160×160 intersection matrix of the reducible conics. Diagonal −2; lines
/// within one orbit are disjoint; cross-orbit intersections follow inc.
pub fn gram_reducible() -> Vec<Vec<i64>> {
    let member = membership_table();
    let pairs = reducible_conics();
    pairs
        .iter()
        .map(|&p| pairs.iter().map(|&q| gram_entry(&member, p, q)).collect())
        .collect()
}

/// Gram matrix of the 320 conics, optionally bordered by the hyperplane
/// class. Order: 160 reducible conics C = L + M, then their complements
/// D = h − L − M in the same pair order, then h if requested.
///
/// The dictionary: h² = 4, h·L = h·M = 1, so h·C = h·D = 2, D·D′ = C·C′, and
/// C·D′ = 2 − C·C′.
pub fn gram_full320(include_h: bool) -> Vec<Vec<i64>> {
    let n = gram_reducible();
    let dim = if include_h { 321 } else { 320 };
    let mut m = vec![vec![0i64; dim]; dim];
    for i in 0..160 {
        for j in 0..160 {
            m[i][j] = n[i][j];
            m[160 + i][160 + j] = n[i][j];
            m[i][160 + j] = 2 - n[i][j];
            m[160 + i][j] = 2 - n[i][j];
        }
    }
    if include_h {
        for i in 0..320 {
            m[320][i] = 2;
            m[i][320] = 2;
        }
        m[320][320] = 4;
    }
    m
}

/// Translation action on conic labels: g·(a, b) = (a xor g, b xor g). The
/// orbit of (a, b) is determined by a xor b, giving 10 orbits of 16.
pub fn translate(g: Label, c: (Label, Label)) -> (Label, Label) {
    (c.0 ^ g, c.1 ^ g)
}

/// Distribution of C·gC over the 15 nonidentity g for the orbit with
/// a xor b = s. Keys are intersection numbers, values are counts.
pub fn same_orbit_distribution(s: Label) -> std::collections::BTreeMap<i64, usize> {
    let member = membership_table();
    assert!(member[s as usize]);
    let c = (0u8, s);
    let mut dist = std::collections::BTreeMap::new();
    for g in 1..16u8 {
        let v = gram_entry(&member, c, translate(g, c));
        *dist.entry(v).or_insert(0) += 1;
    }
    dist
}

/// Distribution of C·gD over all 16 g for representatives of two distinct
/// orbits s and s2. Independent of the chosen representatives.
pub fn cross_orbit_distribution(s: Label, s2: Label) -> std::collections::BTreeMap<i64, usize> {
    let member = membership_table();
    assert!(member[s as usize] && member[s2 as usize] && s != s2);
    let c = (0u8, s);
    let d = (0u8, s2);
    let mut dist = std::collections::BTreeMap::new();
    for g in 0..16u8 {
        let v = gram_entry(&member, c, translate(g, d));
        *dist.entry(v).or_insert(0) += 1;
    }
    dist
}

/// The row/column ordinals of the distinguished 16-conic submatrix.
pub const M_ORDINALS: [usize; 16] = [
    4, 7, 21, 27, 36, 50, 75, 81, 88, 110, 114, 128, 131, 138, 141, 154,
];

/// An indexing convention for extracting the submatrix: ordinal base and
/// whether the two line-orbit roles are swapped (pairs enumerated b-major).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Convention {
    pub one_based: bool,
    pub swapped: bool,
}

pub const FROZEN_CONVENTION: Convention = Convention {
    one_based: true,
    swapped: false,
};

/// Extracts the 16×16 submatrix of the reducible-conic Gram matrix at the
/// distinguished ordinals under the given convention.
pub fn submatrix_m(conv: Convention) -> Vec<Vec<i64>> {
    let member = membership_table();
    let mut pairs = reducible_conics();
    if conv.swapped {
        pairs = pairs.iter().map(|&(a, b)| (b, a)).collect();
        pairs.sort();
    }
    let offset = usize::from(conv.one_based);
    let picked: Vec<(Label, Label)> = M_ORDINALS.iter().map(|&o| pairs[o - offset]).collect();
    picked
        .iter()
        .map(|&p| picked.iter().map(|&q| gram_entry(&member, p, q)).collect())
        .collect()
}

/// Exact determinant of a small integer matrix.
pub fn int_det(m: &[Vec<i64>]) -> crate::tower::Rat {
    let t = Tower::rationals();
    Mat::from_i64_rows(&t, m).det().as_rat().unwrap().clone()
}

/// The reference matrix the conventions are searched against.
pub const M_EXPECTED: [[i64; 16]; 16] = [
    [-2, 0, 2, 1, 2, 2, 1, 0, 0, 2, 0, 1, 1, 2, 1, 1],
    [0, -2, 1, 0, 2, 1, 2, 0, 0, 1, 2, 2, 1, 2, 1, 2],
    [2, 1, -2, 0, 1, 1, 2, 0, 1, 1, 1, 0, 0, 0, 1, 2],
    [1, 0, 0, -2, 1, 0, 2, 1, 2, 1, 1, 1, 1, 1, 1, 2],
    [2, 2, 1, 1, -2, 1, 1, 2, 2, 0, 1, 2, 1, 1, 1, 0],
    [2, 1, 1, 0, 1, -2, 1, 2, 1, 0, 2, 2, 1, 1, 2, 1],
    [1, 2, 2, 2, 1, 1, -2, 1, 0, 2, 1, 1, 1, 0, 1, 1],
    [0, 0, 0, 1, 2, 2, 1, -2, 0, 1, 1, 1, 0, 1, 0, 2],
    [0, 0, 1, 2, 2, 1, 0, 0, -2, 2, 1, 2, 0, 1, 2, 1],
    [2, 1, 1, 1, 0, 0, 2, 1, 2, -2, 2, 2, 1, 1, 1, 0],
    [0, 2, 1, 1, 1, 2, 1, 1, 1, 2, -2, 0, 1, 1, 2, 0],
    [1, 2, 0, 1, 2, 2, 1, 1, 2, 2, 0, -2, 2, 0, 1, 2],
    [1, 1, 0, 1, 1, 1, 1, 0, 0, 1, 1, 2, -2, 0, 0, 0],
    [2, 2, 0, 1, 1, 1, 0, 1, 1, 1, 1, 0, 0, -2, 1, 1],
    [1, 1, 1, 1, 1, 2, 1, 0, 2, 1, 2, 1, 0, 1, -2, 1],
    [1, 2, 2, 2, 0, 1, 1, 2, 1, 0, 0, 2, 0, 1, 1, -2],
];

fn matches_expected(m: &[Vec<i64>]) -> bool {
    (0..16).all(|i| (0..16).all(|j| m[i][j] == M_EXPECTED[i][j]))
}

/// Tries the four indexing conventions and returns those reproducing the
/// reference matrix. Orbit-role swap is a genuine symmetry of the
/// configuration, so both unswapped and swapped 1-based variants match; the
/// frozen convention is the unswapped one.
pub fn convention_search() -> Vec<Convention> {
    let mut found = Vec::new();
    for one_based in [true, false] {
        for swapped in [false, true] {
            let conv = Convention { one_based, swapped };
            if matches_expected(&submatrix_m(conv)) {
                found.push(conv);
            }
        }
    }
    found
}
