//! The order-32 Heisenberg-type subgroup of SL₄ generated by two coordinate
//! swaps and two sign changes, its F₂⁴ quotient with symplectic form, the 30
//! fix lines, and the plane classification with tetrahedra and fundamental
//! quadrics.
//!
//! Labels are 4-bit integers b₃b₂b₁b₀ = (i,j,k,l) with canonical lift
//! σ₁^i σ₂^j τ₁^k τ₂^l, so σ₁=8, σ₂=4, τ₁=2, τ₂=1. The lift map is a
//! set-section only: lifts multiply up to a global sign.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::linalg::Mat;
use crate::mpoly::MPoly;
use crate::tower::{FieldElement, Tower};

pub type Label = u8;
pub type Mat4 = [[i64; 4]; 4];

pub const IDENTITY4: Mat4 = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]];

/// σ₁: (x,y,z,w) ↦ (z,w,x,y)
pub const SIGMA1: Mat4 = [[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]];
/// σ₂: (x,y,z,w) ↦ (y,x,w,z)
pub const SIGMA2: Mat4 = [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]];
/// τ₁ = diag(1,1,−1,−1)
pub const TAU1: Mat4 = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]];
/// τ₂ = diag(1,−1,1,−1)
pub const TAU2: Mat4 = [[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, 1, 0], [0, 0, 0, -1]];

pub fn mat4_mul(a: &Mat4, b: &Mat4) -> Mat4 {
    let mut c = [[0i64; 4]; 4];
    for i in 0..4 {
        for k in 0..4 {
            if a[i][k] == 0 {
                continue;
            }
            for j in 0..4 {
                c[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    c
}

pub fn mat4_neg(a: &Mat4) -> Mat4 {
    let mut c = *a;
    for row in &mut c {
        for x in row {
            *x = -*x;
        }
    }
    c
}

pub fn mat4_apply(a: &Mat4, v: &[i64; 4]) -> [i64; 4] {
    let mut out = [0i64; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i] += a[i][j] * v[j];
        }
    }
    out
}

/// Canonical lift σ₁^i σ₂^j τ₁^k τ₂^l of a label.
pub fn lift(g: Label) -> Mat4 {
    assert!(g < 16);
    let mut m = IDENTITY4;
    if g & 8 != 0 {
        m = mat4_mul(&m, &SIGMA1);
    }
    if g & 4 != 0 {
        m = mat4_mul(&m, &SIGMA2);
    }
    if g & 2 != 0 {
        m = mat4_mul(&m, &TAU1);
    }
    if g & 1 != 0 {
        m = mat4_mul(&m, &TAU2);
    }
    m
}

/// All 32 matrices ±lift(g).
pub fn enumerate_group() -> Vec<Mat4> {
    let mut out = Vec::with_capacity(32);
    for g in 0..16 {
        let m = lift(g);
        out.push(m);
        out.push(mat4_neg(&m));
    }
    out
}

/// Elements of the matrix group commuting with everything.
pub fn center() -> Vec<Mat4> {
    let all = enumerate_group();
    all.iter()
        .filter(|m| all.iter().all(|n| mat4_mul(m, n) == mat4_mul(n, m)))
        .copied()
        .collect()
}

/// Symplectic form on labels: 0 if lifts commute, 1 if they anticommute.
pub fn symplectic(a: Label, b: Label) -> u8 {
    let (ma, mb) = (lift(a), lift(b));
    let ab = mat4_mul(&ma, &mb);
    let ba = mat4_mul(&mb, &ma);
    if ab == ba {
        0
    } else {
        debug_assert_eq!(ab, mat4_neg(&ba));
        1
    }
}

/// Gram matrix of the form on the generator basis (σ₁, σ₂, τ₁, τ₂).
pub fn symplectic_gram() -> [[u8; 4]; 4] {
    let gens: [Label; 4] = [8, 4, 2, 1];
    let mut g = [[0u8; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            g[i][j] = symplectic(gens[i], gens[j]);
        }
    }
    g
}

/// One of the two fix lines in P³ of a nonidentity label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixLine {
    pub owner: Label,
    /// Eigenvalue of the canonical lift on this line (±1 or ±i).
    pub eigenvalue: FieldElement,
    /// Two spanning points, each normalized so its first nonzero coordinate is 1.
    pub span: [Vec<FieldElement>; 2],
    /// Reduced row-echelon form of the 2×4 span matrix; the line's identity.
    pub echelon: Mat,
}

impl FixLine {
    pub fn same_line(&self, other: &FixLine) -> bool {
        self.echelon == other.echelon
    }
}

pub fn gaussian() -> Arc<Tower> {
    Tower::gaussian()
}

/// Scales a vector so its first nonzero coordinate is 1.
pub fn normalize_point(v: &[FieldElement]) -> Vec<FieldElement> {
    let lead = v.iter().find(|c| !c.is_zero()).expect("zero vector");
    let inv = lead.inv().unwrap();
    v.iter().map(|c| c.mul(&inv)).collect()
}

fn echelon_of_span(tower: &Arc<Tower>, a: &[FieldElement], b: &[FieldElement]) -> Mat {
    let m = Mat::from_rows(tower, vec![a.to_vec(), b.to_vec()]);
    m.rref().0
}

fn echelon_key(m: &Mat) -> Vec<crate::tower::Rat> {
    let mut key = Vec::new();
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            key.extend(m.at(i, j).coords().to_vec());
        }
    }
    key
}

/// Eigenspace decomposition of a nonidentity label's lift: two disjoint lines.
/// The pair is ordered by the echelon form of the span matrices.
pub fn fix_lines_of(g: Label) -> [FixLine; 2] {
    assert!(g != 0 && g < 16);
    let t = gaussian();
    let m = lift(g);
    let m2 = mat4_mul(&m, &m);
    let eigens: [FieldElement; 2] = if m2 == IDENTITY4 {
        [t.from_i64(1), t.from_i64(-1)]
    } else {
        assert_eq!(m2, mat4_neg(&IDENTITY4));
        let i = t.generator(0);
        [i.clone(), i.neg()]
    };
    let mut lines: Vec<FixLine> = eigens
        .into_iter()
        .map(|ev| {
            // kernel of (lift − ev·I)
            let rows: Vec<Vec<FieldElement>> = (0..4)
                .map(|r| {
                    (0..4)
                        .map(|c| {
                            let base = t.from_i64(m[r][c]);
                            if r == c {
                                base.sub(&ev)
                            } else {
                                base
                            }
                        })
                        .collect()
                })
                .collect();
            let mat = Mat::from_rows(&t, rows);
            let kernel = mat.kernel();
            assert_eq!(kernel.len(), 2, "eigenspace must be 2-dimensional");
            let span = [
                normalize_point(&kernel[0]),
                normalize_point(&kernel[1]),
            ];
            let echelon = echelon_of_span(&t, &span[0], &span[1]);
            FixLine {
                owner: g,
                eigenvalue: ev,
                span,
                echelon,
            }
        })
        .collect();
    lines.sort_by_key(|l| echelon_key(&l.echelon));
    [lines.remove(0), lines.remove(0)]
}

/// The 30 fix lines, grouped by owner label in increasing order.
pub fn all_fix_lines() -> Vec<FixLine> {
    (1..16).flat_map(|g| fix_lines_of(g)).collect()
}

/// Exact incidence test: two lines in P³ meet iff their four spanning points
/// are linearly dependent.
pub fn lines_meet(a: &FixLine, b: &FixLine) -> bool {
    let t = gaussian();
    let m = Mat::from_rows(
        &t,
        vec![
            a.span[0].clone(),
            a.span[1].clone(),
            b.span[0].clone(),
            b.span[1].clone(),
        ],
    );
    m.rank() < 4
}

/// Transports a line by a label's lift and returns the canonical echelon form.
pub fn map_line(h: Label, line: &FixLine) -> Mat {
    let t = gaussian();
    let m = lift(h);
    let image: Vec<Vec<FieldElement>> = line
        .span
        .iter()
        .map(|p| {
            (0..4)
                .map(|r| {
                    let mut acc = t.zero();
                    for c in 0..4 {
                        if m[r][c] != 0 {
                            acc = acc.add(&p[c].mul(&t.from_i64(m[r][c])));
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect();
    echelon_of_span(&t, &image[0], &image[1])
}

/// A 2-dimensional subspace of F₂⁴.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct F2Plane {
    /// The three nonzero members, sorted.
    pub members: [Label; 3],
    pub isotropic: bool,
}

impl F2Plane {
    pub fn contains(&self, g: Label) -> bool {
        g == 0 || self.members.contains(&g)
    }
}

/// All 35 planes of F₂⁴, sorted by member triple.
pub fn classify_planes() -> Vec<F2Plane> {
    let mut seen = BTreeSet::new();
    let mut planes = Vec::new();
    for g in 1..16u8 {
        for h in (g + 1)..16 {
            let k = g ^ h;
            let mut members = [g, h, k];
            members.sort_unstable();
            if !seen.insert(members) {
                continue;
            }
            planes.push(F2Plane {
                members,
                isotropic: symplectic(g, h) == 0,
            });
        }
    }
    planes.sort_by_key(|p| p.members);
    planes
}

/// Symplectic orthogonal complement of a plane.
pub fn orthogonal_plane(p: &F2Plane) -> F2Plane {
    let mut members: Vec<Label> = (1..16)
        .filter(|&k| p.members.iter().all(|&m| symplectic(k, m) == 0))
        .collect();
    assert_eq!(members.len(), 3, "complement of a plane is a plane");
    members.sort_unstable();
    let members = [members[0], members[1], members[2]];
    F2Plane {
        isotropic: symplectic(members[0], members[1]) == 0,
        members,
    }
}

/// The 10 unordered pairs {P, P^⊥} of anisotropic planes.
pub fn anisotropic_pairs() -> Vec<(F2Plane, F2Plane)> {
    let mut pairs = Vec::new();
    let mut used = BTreeSet::new();
    for p in classify_planes().into_iter().filter(|p| !p.isotropic) {
        if used.contains(&p.members) {
            continue;
        }
        let q = orthogonal_plane(&p);
        assert!(!q.isotropic);
        used.insert(p.members);
        used.insert(q.members);
        pairs.push((p, q));
    }
    pairs
}

/// An invariant tetrahedron: the 6 fix lines of an isotropic plane's members
/// are its edges.
#[derive(Debug, Clone)]
pub struct Tetrahedron {
    pub plane: F2Plane,
    /// Projective vertices, normalized, in canonical order.
    pub vertices: [Vec<FieldElement>; 4],
    /// Face linear forms (4 coefficients each), normalized.
    pub faces: [Vec<FieldElement>; 4],
}

impl Tetrahedron {
    /// Product of the four face forms as a quartic in x,y,z,w.
    pub fn face_product(&self) -> MPoly {
        let t = gaussian();
        let mut prod = MPoly::constant(4, t.one());
        for f in &self.faces {
            let mut lin = MPoly::zero(4, &t);
            for (i, c) in f.iter().enumerate() {
                lin = lin.add(&MPoly::var(4, i, &t).mul_elem(c));
            }
            prod = prod.mul(&lin);
        }
        prod
    }
}

/// Intersection point of two meeting lines.
fn intersection_point(a: &FixLine, b: &FixLine) -> Option<Vec<FieldElement>> {
    let t = gaussian();
    // columns a0 a1 −b0 −b1; kernel vector gives the common point
    let rows: Vec<Vec<FieldElement>> = (0..4)
        .map(|r| {
            vec![
                a.span[0][r].clone(),
                a.span[1][r].clone(),
                b.span[0][r].neg(),
                b.span[1][r].neg(),
            ]
        })
        .collect();
    let m = Mat::from_rows(&t, rows);
    let kernel = m.kernel();
    if kernel.len() != 1 {
        return None; // skew (0) or identical (2)
    }
    let k = &kernel[0];
    let point: Vec<FieldElement> = (0..4)
        .map(|r| a.span[0][r].mul(&k[0]).add(&a.span[1][r].mul(&k[1])))
        .collect();
    Some(normalize_point(&point))
}

pub fn tetrahedron_of(plane: &F2Plane) -> Tetrahedron {
    assert!(plane.isotropic, "tetrahedra come from isotropic planes");
    let t = gaussian();
    let lines: Vec<FixLine> = plane.members.iter().flat_map(|&g| fix_lines_of(g)).collect();
    assert_eq!(lines.len(), 6);
    // vertices: distinct pairwise intersections of the 6 edges
    let mut vertices: Vec<Vec<FieldElement>> = Vec::new();
    for i in 0..6 {
        for j in (i + 1)..6 {
            if let Some(p) = intersection_point(&lines[i], &lines[j]) {
                if !vertices.contains(&p) {
                    vertices.push(p);
                }
            }
        }
    }
    assert_eq!(vertices.len(), 4, "tetrahedron has 4 vertices");
    vertices.sort_by(|a, b| {
        let ka: Vec<_> = a.iter().flat_map(|c| c.coords().to_vec()).collect();
        let kb: Vec<_> = b.iter().flat_map(|c| c.coords().to_vec()).collect();
        ka.cmp(&kb)
    });
    // faces: for each vertex triple, the plane through it
    let mut faces = Vec::new();
    for skip in 0..4 {
        let rows: Vec<Vec<FieldElement>> = (0..4)
            .filter(|&v| v != skip)
            .map(|v| vertices[v].clone())
            .collect();
        let m = Mat::from_rows(&t, rows);
        let kernel = m.kernel();
        assert_eq!(kernel.len(), 1, "three vertices span a plane");
        faces.push(normalize_point(&kernel[0]));
    }
    faces.sort_by(|a, b| {
        let ka: Vec<_> = a.iter().flat_map(|c| c.coords().to_vec()).collect();
        let kb: Vec<_> = b.iter().flat_map(|c| c.coords().to_vec()).collect();
        ka.cmp(&kb)
    });
    Tetrahedron {
        plane: plane.clone(),
        vertices: vertices.try_into().unwrap(),
        faces: faces.try_into().unwrap(),
    }
}

/// The unique quadric through the 12 fix lines of an orthogonal anisotropic
/// plane pair, as a quadratic form in x,y,z,w.
pub fn quadric_of(pair: &(F2Plane, F2Plane)) -> MPoly {
    assert!(!pair.0.isotropic && !pair.1.isotropic);
    let t = gaussian();
    let labels = pair.0.members.iter().chain(pair.1.members.iter());
    let lines: Vec<FixLine> = labels.flat_map(|&g| fix_lines_of(g)).collect();
    assert_eq!(lines.len(), 12);
    // unknowns: coefficients c_ij (i ≤ j) of the quadric, ordered (0,0),(0,1),...
    let pairs: Vec<(usize, usize)> = (0..4)
        .flat_map(|i| (i..4).map(move |j| (i, j)))
        .collect();
    let mut rows = Vec::new();
    for line in &lines {
        let (a, b) = (&line.span[0], &line.span[1]);
        // q(sa + tb) has s², st, t² coefficients linear in c_ij
        for (wa, wb) in [(1, 0), (0, 1), (1, 1)] {
            // evaluate the bilinear expansion at (s,t) = (1,0),(0,1),(1,1);
            // the three values vanish iff all three coefficients do
            let pt: Vec<FieldElement> = (0..4)
                .map(|r| {
                    a[r].mul(&t.from_i64(wa)).add(&b[r].mul(&t.from_i64(wb)))
                })
                .collect();
            let row: Vec<FieldElement> = pairs.iter().map(|&(i, j)| pt[i].mul(&pt[j])).collect();
            rows.push(row);
        }
    }
    let m = Mat::from_rows(&t, rows);
    let kernel = m.kernel();
    assert_eq!(
        kernel.len(),
        1,
        "quadric through 12 fix lines must be unique"
    );
    let c = normalize_point(&kernel[0]);
    let mut q = MPoly::zero(4, &t);
    for (idx, &(i, j)) in pairs.iter().enumerate() {
        let mut exps = [0u16; 4];
        exps[i] += 1;
        exps[j] += 1;
        q.add_term(crate::mpoly::Mono::new(exps.to_vec()), c[idx].clone());
    }
    q
}

/// Applies a label's lift to a polynomial in x,y,z,w: f ↦ f∘lift.
pub fn transform_poly(f: &MPoly, g: Label) -> MPoly {
    transform_poly_mat(f, &lift(g))
}

pub fn transform_poly_mat(f: &MPoly, m: &Mat4) -> MPoly {
    assert_eq!(f.nvars(), 4);
    let t = f.tower().clone();
    let subs: Vec<MPoly> = (0..4)
        .map(|i| {
            let mut lin = MPoly::zero(4, &t);
            for j in 0..4 {
                if m[i][j] != 0 {
                    lin = lin.add(&MPoly::var(4, j, &t).mul_rat(&crate::tower::rat(m[i][j])));
                }
            }
            lin
        })
        .collect();
    f.substitute(&subs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_order_and_center() {
        let all = enumerate_group();
        assert_eq!(all.len(), 32);
        let set: BTreeSet<Mat4> = all.iter().copied().collect();
        assert_eq!(set.len(), 32, "all 32 matrices distinct");
        let z = center();
        assert_eq!(z.len(), 2);
        assert!(z.contains(&IDENTITY4));
        assert!(z.contains(&mat4_neg(&IDENTITY4)));
    }

    #[test]
    fn lifts_are_a_section() {
        for g in 0..16u8 {
            for h in 0..16u8 {
                let prod = mat4_mul(&lift(g), &lift(h));
                let target = lift(g ^ h);
                assert!(
                    prod == target || prod == mat4_neg(&target),
                    "lift product must be ±lift of the XOR label"
                );
            }
        }
    }

    #[test]
    fn every_label_squares_to_identity() {
        for g in 1..16u8 {
            let m2 = mat4_mul(&lift(g), &lift(g));
            assert!(m2 == IDENTITY4 || m2 == mat4_neg(&IDENTITY4));
        }
    }

    #[test]
    fn symplectic_gram_on_generators() {
        // σ pairs with its τ partner only
        let g = symplectic_gram();
        let expected = [
            [0, 0, 1, 0],
            [0, 0, 0, 1],
            [1, 0, 0, 0],
            [0, 1, 0, 0],
        ];
        assert_eq!(g, expected);
    }

    #[test]
    fn symplectic_bilinear_and_nondegenerate() {
        for a in 0..16u8 {
            assert_eq!(symplectic(a, a), 0);
            for b in 0..16u8 {
                assert_eq!(symplectic(a, b), symplectic(b, a));
                for c in 0..16u8 {
                    assert_eq!(
                        symplectic(a ^ b, c),
                        symplectic(a, c) ^ symplectic(b, c),
                        "bilinearity at ({a},{b},{c})"
                    );
                }
            }
        }
        // nondegeneracy: no nonzero label pairs to 0 with everything
        for a in 1..16u8 {
            assert!((1..16u8).any(|b| symplectic(a, b) == 1));
        }
    }

    #[test]
    fn tau1_fix_lines_are_coordinate_lines() {
        let [l1, l2] = fix_lines_of(2); // τ₁
        let t = gaussian();
        // lines {x=y=0} and {z=w=0}; the echelon sort puts {x=y=0} first
        let e1 = Mat::from_i64_rows(&t, &[vec![0, 0, 1, 0], vec![0, 0, 0, 1]]);
        let e2 = Mat::from_i64_rows(&t, &[vec![1, 0, 0, 0], vec![0, 1, 0, 0]]);
        assert_eq!(l1.echelon, e1);
        assert_eq!(l2.echelon, e2);
        assert!(!lines_meet(&l1, &l2));
    }

    #[test]
    fn sigma1_fix_lines() {
        // x=z, y=w and x=−z, y=−w
        let [l1, l2] = fix_lines_of(8);
        for p in l1.span.iter().chain(l2.span.iter()) {
            let m = lift(8);
            // eigenvector: Mp = ±p
            let img: Vec<FieldElement> = (0..4)
                .map(|r| {
                    let t = gaussian();
                    let mut acc = t.zero();
                    for c in 0..4 {
                        if m[r][c] != 0 {
                            acc = acc.add(&p[c].mul(&t.from_i64(m[r][c])));
                        }
                    }
                    acc
                })
                .collect();
            assert!(img == *p || img.iter().zip(p).all(|(a, b)| a.neg() == *b));
        }
        assert!(!lines_meet(&l1, &l2));
    }

    #[test]
    fn thirty_distinct_fix_lines() {
        let lines = all_fix_lines();
        assert_eq!(lines.len(), 30);
        for i in 0..30 {
            for j in (i + 1)..30 {
                assert!(
                    !lines[i].same_line(&lines[j]),
                    "lines {i} and {j} coincide"
                );
            }
        }
    }

    #[test]
    fn incidence_iff_commuting() {
        for g in 1..16u8 {
            for h in (g + 1)..16u8 {
                let lg = fix_lines_of(g);
                let lh = fix_lines_of(h);
                let commute = symplectic(g, h) == 0;
                for a in &lg {
                    for b in &lh {
                        assert_eq!(
                            lines_meet(a, b),
                            commute,
                            "incidence mismatch for ({g},{h})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn commuting_preserves_anticommuting_flips() {
        for g in 1..16u8 {
            let lines = fix_lines_of(g);
            for h in 1..16u8 {
                let imgs = [map_line(h, &lines[0]), map_line(h, &lines[1])];
                if symplectic(g, h) == 0 {
                    assert_eq!(imgs[0], lines[0].echelon);
                    assert_eq!(imgs[1], lines[1].echelon);
                } else {
                    assert_eq!(imgs[0], lines[1].echelon);
                    assert_eq!(imgs[1], lines[0].echelon);
                }
            }
        }
    }

    #[test]
    fn plane_census() {
        let planes = classify_planes();
        assert_eq!(planes.len(), 35);
        let iso = planes.iter().filter(|p| p.isotropic).count();
        assert_eq!(iso, 15);
        assert_eq!(planes.len() - iso, 20);
        let pairs = anisotropic_pairs();
        assert_eq!(pairs.len(), 10);
        for (p, q) in &pairs {
            for &a in &p.members {
                for &b in &q.members {
                    assert_eq!(symplectic(a, b), 0);
                }
            }
            assert!(p.members.iter().all(|m| !q.members.contains(m)));
        }
    }

    #[test]
    fn diagonal_tetrahedron() {
        // plane spanned by τ₁=2, τ₂=1: members {1,2,3}
        let plane = classify_planes()
            .into_iter()
            .find(|p| p.members == [1, 2, 3])
            .unwrap();
        assert!(plane.isotropic);
        let tet = tetrahedron_of(&plane);
        // faces are the coordinate planes, so the product is a multiple of xyzw
        let prod = tet.face_product();
        let expect = MPoly::from_int_terms(4, &gaussian(), &[(&[1, 1, 1, 1], 1)]);
        let lead = prod.leading().unwrap().1.clone();
        assert_eq!(prod, expect.mul_elem(&lead));
    }

    #[test]
    fn quadric_line_geometry() {
        let pairs = anisotropic_pairs();
        let (p1, p2) = &pairs[0];
        let lines1: Vec<FixLine> = p1.members.iter().flat_map(|&g| fix_lines_of(g)).collect();
        let lines2: Vec<FixLine> = p2.members.iter().flat_map(|&g| fix_lines_of(g)).collect();
        // one ruling: mutually disjoint
        for i in 0..6 {
            for j in (i + 1)..6 {
                assert!(!lines_meet(&lines1[i], &lines1[j]));
                assert!(!lines_meet(&lines2[i], &lines2[j]));
            }
        }
        // opposite rulings meet
        for a in &lines1 {
            for b in &lines2 {
                assert!(lines_meet(a, b));
            }
        }
        let q = quadric_of(&(p1.clone(), p2.clone()));
        assert_eq!(q.degree(), Some(2));
        // q vanishes on all 12 lines
        for line in lines1.iter().chain(lines2.iter()) {
            let r = crate::mpoly::restrict_to_line(&q, &line.span[0], &line.span[1]);
            assert!(r.is_zero());
        }
    }
}
