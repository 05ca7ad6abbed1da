//! Exact integer-lattice arithmetic on Gram matrices: fraction-free
//! determinants, rank, signature by congruence diagonalization, evenness,
//! integral solving, saturated orthogonal complements, sublattice indices by
//! discriminant ratio, and complete short-vector enumeration.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::tower::{rat, Rat};

#[derive(Debug, Error)]
pub enum LatticeError {
    #[error("gram matrix is not symmetric")]
    NotSymmetric,
    #[error("gram matrix is degenerate")]
    Degenerate,
    #[error("form is not positive definite")]
    NotPositiveDefinite,
    #[error("no rational solution")]
    NoSolution,
    #[error("vector pairs to zero with the whole lattice")]
    RadicalVector,
    #[error("discriminant ratio {0} is not a perfect square")]
    NonSquareRatio(BigInt),
    #[error("basis vector count does not match the ambient rank")]
    RankMismatch,
}

/// A lattice presented by an integer Gram matrix with named basis vectors.
#[derive(Debug, Clone)]
pub struct GramLattice {
    pub labels: Vec<String>,
    pub gram: Vec<Vec<BigInt>>,
}

impl GramLattice {
    pub fn new(labels: Vec<String>, gram: Vec<Vec<BigInt>>) -> Result<Self, LatticeError> {
        let n = gram.len();
        for row in &gram {
            if row.len() != n {
                return Err(LatticeError::NotSymmetric);
            }
        }
        for i in 0..n {
            for j in 0..n {
                if gram[i][j] != gram[j][i] {
                    return Err(LatticeError::NotSymmetric);
                }
            }
        }
        Ok(GramLattice { labels, gram })
    }

    pub fn from_i64(gram: &[Vec<i64>]) -> Self {
        let big: Vec<Vec<BigInt>> = gram
            .iter()
            .map(|r| r.iter().map(|&e| BigInt::from(e)).collect())
            .collect();
        let labels = (0..gram.len()).map(|i| format!("e{i}")).collect();
        GramLattice::new(labels, big).expect("symmetric input")
    }

    pub fn dim(&self) -> usize {
        self.gram.len()
    }
}

/// Exact determinant by Bareiss fraction-free elimination.
pub fn det_exact(gram: &[Vec<BigInt>]) -> BigInt {
    let n = gram.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = gram.to_vec();
    let mut prev = BigInt::one();
    let mut sign = 1i32;
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero(), "Bareiss divisions are exact");
                a[i][j] = q;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Rank by fraction-free elimination with full pivot search.
pub fn rank(gram: &[Vec<BigInt>]) -> usize {
    let n = gram.len();
    if n == 0 {
        return 0;
    }
    let cols = gram[0].len();
    let mut a: Vec<Vec<BigInt>> = gram.to_vec();
    let mut prev = BigInt::one();
    let mut r = 0;
    for col in 0..cols {
        let pivot = (r..n).find(|&i| !a[i][col].is_zero());
        let Some(p) = pivot else { continue };
        a.swap(r, p);
        for i in r + 1..n {
            for j in col + 1..cols {
                let num = &a[i][j] * &a[r][col] - &a[i][col] * &a[r][j];
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero());
                a[i][j] = q;
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[r][col].clone();
        r += 1;
        if r == n {
            break;
        }
    }
    r
}

/// Signature (positive, negative) by exact congruence diagonalization.
/// Zero diagonal pivots are repaired by adding a row/column pair that makes
/// the pivot 2·a ≠ 0. Errors on degenerate input.
pub fn signature(gram: &[Vec<BigInt>]) -> Result<(usize, usize), LatticeError> {
    let n = gram.len();
    let mut a: Vec<Vec<Rat>> = gram
        .iter()
        .map(|r| r.iter().map(|e| Rat::from_integer(e.clone())).collect())
        .collect();
    let mut pos = 0;
    let mut neg = 0;
    for k in 0..n {
        if a[k][k].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a[j][j].is_zero()) {
                // symmetric swap of k and j
                a.swap(k, j);
                for row in a.iter_mut() {
                    row.swap(k, j);
                }
            } else if let Some(j) = (k + 1..n).find(|&j| !a[k][j].is_zero()) {
                // hyperbolic repair: row/col k += row/col j
                for c in 0..n {
                    let add = a[j][c].clone();
                    a[k][c] += add;
                }
                for r in 0..n {
                    let add = a[r][j].clone();
                    a[r][k] += add;
                }
            } else {
                return Err(LatticeError::Degenerate);
            }
        }
        let pivot = a[k][k].clone();
        if pivot.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &pivot;
            for c in 0..n {
                let sub = &f * &a[k][c];
                a[i][c] -= sub;
            }
            for r in 0..n {
                let sub = &f * &a[r][k];
                a[r][i] -= sub;
            }
        }
    }
    Ok((pos, neg))
}

/// All diagonal self-products even.
pub fn is_even(gram: &[Vec<BigInt>]) -> bool {
    gram.iter().enumerate().all(|(i, r)| r[i].is_even())
}

/// Solves Gram·x = target over the rationals and tests integrality.
/// Ok(Some(x)) for an integral solution, Ok(None) for a rational-only one,
/// Err for an inconsistent system.
pub fn solve_integral(
    gram: &[Vec<BigInt>],
    target: &[BigInt],
) -> Result<Option<Vec<BigInt>>, LatticeError> {
    let n = gram.len();
    assert_eq!(target.len(), n);
    // rational row reduction on the augmented system
    let mut a: Vec<Vec<Rat>> = gram
        .iter()
        .zip(target)
        .map(|(row, t)| {
            row.iter()
                .map(|e| Rat::from_integer(e.clone()))
                .chain(std::iter::once(Rat::from_integer(t.clone())))
                .collect()
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..n).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].clone();
        for e in a[r].iter_mut() {
            *e /= &inv;
        }
        for i in 0..n {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..=n {
                    let sub = &f * &a[r][j];
                    a[i][j] -= sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == n {
            break;
        }
    }
    for i in r..n {
        if !a[i][n].is_zero() {
            return Err(LatticeError::NoSolution);
        }
    }
    let mut x = vec![Rat::zero(); n];
    for (row, &c) in pivots.iter().enumerate() {
        x[c] = a[row][n].clone();
    }
    if x.iter().all(|v| v.denom().is_one()) {
        Ok(Some(x.into_iter().map(|v| v.numer().clone()).collect()))
    } else {
        Ok(None)
    }
}

/// v·Gram·v for integer coordinates.
pub fn norm_of(gram: &[Vec<BigInt>], v: &[BigInt]) -> BigInt {
    let n = gram.len();
    let mut s = BigInt::zero();
    for i in 0..n {
        for j in 0..n {
            s += &v[i] * &gram[i][j] * &v[j];
        }
    }
    s
}

pub fn product_of(gram: &[Vec<BigInt>], v: &[BigInt], w: &[BigInt]) -> BigInt {
    let n = gram.len();
    let mut s = BigInt::zero();
    for i in 0..n {
        for j in 0..n {
            s += &v[i] * &gram[i][j] * &w[j];
        }
    }
    s
}

/// Saturated integer kernel of the linear form x ↦ w·x for w ≠ 0: columns
/// 1..n of a unimodular matrix U with w·U = (g, 0, …, 0).
fn form_kernel(w: &[BigInt]) -> Vec<Vec<BigInt>> {
    let n = w.len();
    let mut u: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();
    // u is column-major: u[j] is the j-th basis column
    let mut s: Vec<BigInt> = w.to_vec();
    for j in 1..n {
        if s[j].is_zero() {
            continue;
        }
        let e = s[0].extended_gcd(&s[j]);
        let (g, x, y) = (e.gcd, e.x, e.y);
        let c0 = (&s[0] / &g).clone();
        let cj = (&s[j] / &g).clone();
        for i in 0..n {
            let a = u[0][i].clone();
            let b = u[j][i].clone();
            u[0][i] = &x * &a + &y * &b;
            u[j][i] = &c0 * &b - &cj * &a;
        }
        s[0] = g;
        s[j] = BigInt::zero();
    }
    assert!(!s[0].is_zero(), "form must be nonzero");
    u.into_iter().skip(1).collect()
}

/// Orthogonal complement of the vector with coordinates v inside the
/// lattice: saturated rank-(n−1) sublattice with its restricted Gram matrix.
/// Also returns the kernel basis in ambient coordinates.
pub fn orth_complement(
    lat: &GramLattice,
    v: &[BigInt],
) -> Result<(GramLattice, Vec<Vec<BigInt>>), LatticeError> {
    let n = lat.dim();
    assert_eq!(v.len(), n);
    let w: Vec<BigInt> = (0..n)
        .map(|i| (0..n).map(|j| &lat.gram[i][j] * &v[j]).sum())
        .collect();
    if w.iter().all(|e| e.is_zero()) {
        return Err(LatticeError::RadicalVector);
    }
    let basis = form_kernel(&w);
    let m = basis.len();
    let mut gram = vec![vec![BigInt::zero(); m]; m];
    for i in 0..m {
        for j in 0..m {
            gram[i][j] = product_of(&lat.gram, &basis[i], &basis[j]);
        }
    }
    let labels = (0..m).map(|i| format!("k{i}")).collect();
    Ok((GramLattice::new(labels, gram)?, basis))
}

/// Index of the full-rank sublattice spanned by the given coordinate vectors
/// inside the ambient lattice: the square root of the discriminant ratio,
/// cross-checked against |det| of the coordinate matrix.
pub fn sublattice_index(
    ambient: &GramLattice,
    basis_in_ambient: &[Vec<BigInt>],
) -> Result<BigInt, LatticeError> {
    let n = ambient.dim();
    if basis_in_ambient.len() != n {
        return Err(LatticeError::RankMismatch);
    }
    let mut sub = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            sub[i][j] = product_of(&ambient.gram, &basis_in_ambient[i], &basis_in_ambient[j]);
        }
    }
    let d_sub = det_exact(&sub);
    let d_amb = det_exact(&ambient.gram);
    if d_amb.is_zero() || d_sub.is_zero() {
        return Err(LatticeError::Degenerate);
    }
    let (ratio, rem) = d_sub.div_rem(&d_amb);
    if !rem.is_zero() || !ratio.is_positive() {
        return Err(LatticeError::NonSquareRatio(ratio));
    }
    let root = ratio.sqrt();
    if &root * &root != ratio {
        return Err(LatticeError::NonSquareRatio(ratio));
    }
    let t: Vec<Vec<BigInt>> = basis_in_ambient.to_vec();
    debug_assert_eq!(det_exact(&t).abs(), root, "index agrees with |det T|");
    Ok(root)
}

/// Complete list of nonzero vectors with 0 < v·Gram·v ≤ bound, both signs
/// included. Errors unless the form is positive definite.
///
/// Enumeration runs on the exact LDL decomposition; interval endpoints are
/// located by floating-point estimate and corrected by exact comparison.
pub fn short_vectors(gram: &[Vec<BigInt>], bound: i64) -> Result<Vec<Vec<BigInt>>, LatticeError> {
    let n = gram.len();
    // exact LDL^T: gram = L D L^T with unit lower-triangular L
    let mut a: Vec<Vec<Rat>> = gram
        .iter()
        .map(|r| r.iter().map(|e| Rat::from_integer(e.clone())).collect())
        .collect();
    let mut d = vec![Rat::zero(); n];
    let mut l = vec![vec![Rat::zero(); n]; n];
    for k in 0..n {
        if !a[k][k].is_positive() {
            return Err(LatticeError::NotPositiveDefinite);
        }
        d[k] = a[k][k].clone();
        l[k][k] = Rat::one();
        for i in k + 1..n {
            l[i][k] = &a[i][k] / &d[k];
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let sub = &l[i][k] * &d[k] * &l[j][k];
                a[i][j] -= sub;
            }
        }
    }
    // Q(x) = Σ_k d_k (x_k + Σ_{i>k} l_ik x_i)², processed from k = n−1 down
    let bound_rat = rat(bound);
    let mut out = Vec::new();
    let mut x = vec![BigInt::zero(); n];
    fn descend(
        k: isize,
        remaining: &Rat,
        x: &mut Vec<BigInt>,
        d: &[Rat],
        l: &[Vec<Rat>],
        out: &mut Vec<Vec<BigInt>>,
    ) {
        if k < 0 {
            if x.iter().any(|e| !e.is_zero()) {
                out.push(x.clone());
            }
            return;
        }
        let k = k as usize;
        // center c = Σ_{i>k} l_ik x_i; admissible x_k solve d_k (x_k+c)² ≤ rem
        let mut c = Rat::zero();
        for i in k + 1..x.len() {
            c += &l[i][k] * Rat::from_integer(x[i].clone());
        }
        let limit = remaining / &d[k];
        let fits = |t: &BigInt| {
            let shifted = Rat::from_integer(t.clone()) + &c;
            &shifted * &shifted <= limit
        };
        let center = -c.to_f64().unwrap_or(0.0);
        let radius = limit.to_f64().unwrap_or(0.0).max(0.0).sqrt();
        let mut lo = BigInt::from((center - radius).floor() as i64);
        let mut hi = BigInt::from((center + radius).ceil() as i64);
        while fits(&(&lo - 1)) {
            lo -= 1;
        }
        while !fits(&lo) && lo <= hi {
            lo += 1;
        }
        while fits(&(&hi + 1)) {
            hi += 1;
        }
        while !fits(&hi) && lo <= hi {
            hi -= 1;
        }
        let mut t = lo;
        while t <= hi {
            let shifted = Rat::from_integer(t.clone()) + &c;
            let used = &d[k] * &shifted * &shifted;
            x[k] = t.clone();
            descend(k as isize - 1, &(remaining - &used), x, d, l, out);
            t += 1;
        }
        x[k] = BigInt::zero();
    }
    descend(n as isize - 1, &bound_rat, &mut x, &d, &l, &mut out);
    Ok(out)
}

/// Smallest nonzero norm, found by growing the enumeration bound.
pub fn minimum_norm(gram: &[Vec<BigInt>]) -> Result<BigInt, LatticeError> {
    let mut bound = 1i64;
    loop {
        let vs = short_vectors(gram, bound)?;
        if let Some(m) = vs.iter().map(|v| norm_of(gram, v)).min() {
            return Ok(m);
        }
        bound *= 2;
        assert!(bound < 1 << 20, "runaway minimum search");
    }
}

/// The rank-15 positive definite even Gram matrix fixture of determinant
/// 512 (the laminated lattice of rank 15 in one basis).
pub const LAMBDA15: [[i64; 15]; 15] = [
    [4, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1],
    [-2, 4, -2, 2, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0],
    [0, -2, 4, 0, 0, 2, 0, 0, 0, 0, 0, 0, 2, 1, 1],
    [0, 2, 0, 4, 2, 2, 0, 0, 0, 0, 0, 0, 0, 1, 1],
    [0, 0, 0, 2, 4, 2, 0, 0, 2, 1, 0, 0, 0, 0, 0],
    [0, 0, 2, 2, 2, 4, 2, 2, 1, 2, 0, 0, 1, 1, 2],
    [0, 0, 0, 0, 0, 2, 4, 2, 0, 2, 0, 0, 0, -1, 1],
    [0, 0, 0, 0, 0, 2, 2, 4, 0, 2, 0, 0, 1, 0, 2],
    [0, 0, 0, 0, 2, 1, 0, 0, 4, 2, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 2, 2, 2, 2, 4, 2, 2, 1, 1, 2],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 4, 2, 2, 1, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 4, 1, 2, 2],
    [0, -1, 2, 0, 0, 1, 0, 1, 0, 1, 2, 1, 4, 0, 2],
    [1, 0, 1, 1, 0, 1, -1, 0, 0, 1, 1, 2, 0, 4, 2],
    [1, 0, 1, 1, 0, 2, 1, 2, 0, 2, 1, 2, 2, 2, 4],
];

pub fn lambda15() -> GramLattice {
    let rows: Vec<Vec<i64>> = LAMBDA15.iter().map(|r| r.to_vec()).collect();
    GramLattice::from_i64(&rows)
}

/// The hyperbolic plane.
pub fn hyperbolic_plane() -> GramLattice {
    GramLattice::from_i64(&[vec![0, 1], vec![1, 0]])
}

/// The lattice on the 16 distinguished conics.
pub fn conic16_lattice() -> GramLattice {
    let m = crate::conics::submatrix_m(crate::conics::FROZEN_CONVENTION);
    GramLattice::from_i64(&m)
}

pub fn negate(gram: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    gram.iter().map(|r| r.iter().map(|e| -e).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn determinants() {
        assert_eq!(det_exact(&lambda15().gram), big(512));
        assert_eq!(det_exact(&conic16_lattice().gram), big(-512));
        assert_eq!(det_exact(&hyperbolic_plane().gram), big(-1));
        let singular = GramLattice::from_i64(&[vec![1, 1], vec![1, 1]]);
        assert_eq!(det_exact(&singular.gram), big(0));
        assert_eq!(rank(&singular.gram), 1);
        assert_eq!(rank(&lambda15().gram), 15);
    }

    #[test]
    fn signatures() {
        assert_eq!(signature(&lambda15().gram).unwrap(), (15, 0));
        assert_eq!(signature(&conic16_lattice().gram).unwrap(), (1, 15));
        assert_eq!(signature(&hyperbolic_plane().gram).unwrap(), (1, 1));
        let singular = GramLattice::from_i64(&[vec![1, 1], vec![1, 1]]);
        assert!(matches!(
            signature(&singular.gram),
            Err(LatticeError::Degenerate)
        ));
    }

    #[test]
    fn signature_is_unimodular_invariant() {
        // deterministic pseudo-random unimodular transforms built from
        // elementary row operations
        let base = conic16_lattice().gram;
        let n = base.len();
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let mut t: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| big(i64::from(i == j))).collect())
            .collect();
        for _ in 0..60 {
            let i = (next() as usize) % n;
            let j = (next() as usize) % n;
            if i == j {
                continue;
            }
            let c = big((next() % 5) as i64 - 2);
            for k in 0..n {
                let add = &c * &t[j][k];
                t[i][k] += add;
            }
        }
        assert_eq!(det_exact(&t).abs(), big(1));
        let mut conj = vec![vec![big(0); n]; n];
        for i in 0..n {
            for j in 0..n {
                conj[i][j] = product_of(&base, &t[i], &t[j]);
            }
        }
        assert_eq!(signature(&conj).unwrap(), (1, 15));
        assert_eq!(det_exact(&conj), det_exact(&base));
    }

    #[test]
    fn evenness() {
        assert!(is_even(&lambda15().gram));
        assert!(is_even(&conic16_lattice().gram));
        assert!(!is_even(&[vec![big(1)]]));
    }

    #[test]
    fn integral_solving() {
        let m = conic16_lattice();
        let target: Vec<BigInt> = vec![big(2); 16];
        let x = solve_integral(&m.gram, &target).unwrap().expect("integral");
        assert_eq!(norm_of(&m.gram, &x), big(4));
        // first basis row as target gives e1
        let row0: Vec<BigInt> = m.gram[0].clone();
        let e1 = solve_integral(&m.gram, &row0).unwrap().unwrap();
        let mut expected = vec![big(0); 16];
        expected[0] = big(1);
        assert_eq!(e1, expected);
        // inconsistent system
        let singular = GramLattice::from_i64(&[vec![1, 1], vec![1, 1]]);
        assert!(matches!(
            solve_integral(&singular.gram, &[big(0), big(1)]),
            Err(LatticeError::NoSolution)
        ));
        // rational but not integral
        let two = GramLattice::from_i64(&[vec![2]]);
        assert_eq!(solve_integral(&two.gram, &[big(1)]).unwrap(), None);
    }

    #[test]
    fn complement_in_hyperbolic_plane() {
        let u = hyperbolic_plane();
        let (comp, basis) = orth_complement(&u, &[big(1), big(1)]).unwrap();
        assert_eq!(comp.dim(), 1);
        assert_eq!(det_exact(&comp.gram), big(-2));
        assert_eq!(product_of(&u.gram, &basis[0], &[big(1), big(1)]), big(0));
    }

    #[test]
    fn complement_is_saturated() {
        let m = conic16_lattice();
        let target: Vec<BigInt> = vec![big(2); 16];
        let h = solve_integral(&m.gram, &target).unwrap().unwrap();
        let (comp, basis) = orth_complement(&m, &h).unwrap();
        assert_eq!(comp.dim(), 15);
        for b in &basis {
            assert_eq!(product_of(&m.gram, b, &h), big(0));
        }
        // saturation: the 16×15 coordinate matrix has a 15×15 minor of
        // absolute value 1 exactly when the quotient is torsion-free; check
        // via content of the maximal minors
        let mut gcd_minors = big(0);
        for skip in 0..16 {
            let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(15);
            for b in &basis {
                let r: Vec<BigInt> = (0..16).filter(|&c| c != skip).map(|c| b[c].clone()).collect();
                rows.push(r);
            }
            gcd_minors = gcd_minors.gcd(&det_exact(&rows));
        }
        assert_eq!(gcd_minors, big(1));
    }

    #[test]
    fn picard_chain() {
        let m = conic16_lattice();
        assert_eq!(det_exact(&m.gram), big(-512));
        assert_eq!(signature(&m.gram).unwrap(), (1, 15));
        assert!(is_even(&m.gram));
        let target: Vec<BigInt> = vec![big(2); 16];
        let h = solve_integral(&m.gram, &target).unwrap().expect("h is integral");
        assert_eq!(norm_of(&m.gram, &h), big(4));
        let (comp, basis) = orth_complement(&m, &h).unwrap();
        assert_eq!(det_exact(&comp.gram), big(-512));
        assert!(is_even(&comp.gram));
        assert_eq!(signature(&comp.gram).unwrap(), (0, 15));
        // index of Zh ⊕ h^perp: discriminant ratio −2^11 / −2^9 = 4
        let mut sub_basis = vec![h.clone()];
        sub_basis.extend(basis.iter().cloned());
        let sub_gram: Vec<Vec<BigInt>> = sub_basis
            .iter()
            .map(|a| sub_basis.iter().map(|b| product_of(&m.gram, a, b)).collect())
            .collect();
        assert_eq!(det_exact(&sub_gram), big(-2048));
        assert_eq!(sublattice_index(&m, &sub_basis).unwrap(), big(2));
    }

    #[test]
    fn index_examples() {
        let l = lambda15();
        let n = l.dim();
        let identity: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| big(i64::from(i == j))).collect())
            .collect();
        assert_eq!(sublattice_index(&l, &identity).unwrap(), big(1));
        let doubled: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| big(if i == j { 2 } else { 0 })).collect())
            .collect();
        assert_eq!(sublattice_index(&l, &doubled).unwrap(), big(1 << 15));
    }

    #[test]
    fn short_vector_basics() {
        let d22 = GramLattice::from_i64(&[vec![2, 0], vec![0, 2]]);
        let vs = short_vectors(&d22.gram, 2).unwrap();
        assert_eq!(vs.len(), 4);
        assert!(matches!(
            short_vectors(&hyperbolic_plane().gram, 2),
            Err(LatticeError::NotPositiveDefinite)
        ));
    }

    #[test]
    fn short_vectors_match_box_oracle() {
        let g = GramLattice::from_i64(&[vec![2, 1, 0], vec![1, 2, 1], vec![0, 1, 3]]);
        let mut found: Vec<Vec<BigInt>> = short_vectors(&g.gram, 8).unwrap();
        found.sort();
        let mut brute = Vec::new();
        for a in -8i64..=8 {
            for b in -8i64..=8 {
                for c in -8i64..=8 {
                    let v = vec![big(a), big(b), big(c)];
                    let n = norm_of(&g.gram, &v);
                    if n > big(0) && n <= big(8) {
                        brute.push(v);
                    }
                }
            }
        }
        brute.sort();
        assert_eq!(found, brute);
    }

    #[test]
    fn lambda15_minimum_and_kissing() {
        let l = lambda15();
        assert!(short_vectors(&l.gram, 3).unwrap().is_empty());
        assert_eq!(minimum_norm(&l.gram).unwrap(), big(4));
        let minimal = short_vectors(&l.gram, 4).unwrap();
        assert_eq!(minimal.len(), 2340);
        assert!(minimal.iter().all(|v| norm_of(&l.gram, v) == big(4)));
    }

    #[test]
    fn complement_invariants_match_lambda15() {
        let m = conic16_lattice();
        let target: Vec<BigInt> = vec![big(2); 16];
        let h = solve_integral(&m.gram, &target).unwrap().unwrap();
        let (comp, _) = orth_complement(&m, &h).unwrap();
        let neg = negate(&comp.gram);
        let l = lambda15().gram;
        assert_eq!(det_exact(&neg), det_exact(&l));
        assert_eq!(signature(&neg).unwrap(), signature(&l).unwrap());
        assert_eq!(is_even(&neg), is_even(&l));
        assert!(short_vectors(&neg, 3).unwrap().is_empty());
        assert_eq!(
            short_vectors(&neg, 4).unwrap().len(),
            short_vectors(&l, 4).unwrap().len()
        );
        assert_eq!(
            short_vectors(&neg, 6).unwrap().len(),
            short_vectors(&l, 6).unwrap().len()
        );
    }

    #[test]
    fn disc_ratio_equals_index_squared() {
        // random-ish integer bases with known determinant
        let l = GramLattice::from_i64(&[vec![2, 1, 0], vec![1, 2, 1], vec![0, 1, 4]]);
        let t = vec![
            vec![big(1), big(2), big(0)],
            vec![big(0), big(1), big(3)],
            vec![big(0), big(0), big(2)],
        ];
        let idx = sublattice_index(&l, &t).unwrap();
        assert_eq!(idx, big(2));
        let mut sub = vec![vec![big(0); 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                sub[i][j] = product_of(&l.gram, &t[i], &t[j]);
            }
        }
        assert_eq!(det_exact(&sub), det_exact(&l.gram) * big(4));
    }
}
