//! Quadratic extension towers over the rationals and exact arithmetic in them.
//!
//! A [`Tower`] is a chain Q = K_0 ⊂ K_1 ⊂ ... ⊂ K_h where each level adjoins a
//! square root g_j of a non-square element d_j of the previous level. Elements
//! are stored as 2^h rational coordinates in the power-product basis of the
//! generators (index bit j set ⇔ generator g_j divides the basis monomial).
//!
//! Height 3 covers everything needed here: i, √2 (for eighth roots of unity)
//! and one splitting root for the conic construction.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision rational, always reduced with positive denominator.
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Formats a rational as `num` or `num/den`.
pub fn rat_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `num` or `num/den`.
pub fn parse_rat(s: &str) -> Result<Rat, TowerError> {
    let parse_int = |t: &str| {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| TowerError::BadRational(s.to_string()))
    };
    match s.split_once('/') {
        None => Ok(Rat::from_integer(parse_int(s)?)),
        Some((n, d)) => {
            let den = parse_int(d)?;
            if den.is_zero() {
                return Err(TowerError::BadRational(s.to_string()));
            }
            Ok(Rat::new(parse_int(n)?, den))
        }
    }
}

/// Exact square root of a rational, if it is a perfect square.
pub fn rat_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let sn = r.numer().sqrt();
    let sd = r.denom().sqrt();
    if &(&sn * &sn) == r.numer() && &(&sd * &sd) == r.denom() {
        Some(Rat::new(sn, sd))
    } else {
        None
    }
}

/// Squarefree kernel of a rational: the unique squarefree integer m with
/// r = m · s² for rational s. Sign is carried by m.
pub fn squarefree_kernel(r: &Rat) -> BigInt {
    assert!(!r.is_zero(), "squarefree kernel of zero");
    let mut m = BigInt::one();
    if r.is_negative() {
        m = -m;
    }
    // numerator and denominator contribute the same way (1/p = p / p²)
    for n in [r.numer().abs(), r.denom().clone()] {
        let mut n = n;
        let mut p = BigInt::from(2);
        while &p * &p <= n {
            let mut e = 0u32;
            while n.is_multiple_of(&p) {
                n /= &p;
                e += 1;
            }
            if e % 2 == 1 {
                m *= &p;
            }
            p += 1;
        }
        if n > BigInt::one() {
            m *= n;
        }
    }
    m
}

#[derive(Debug, Error)]
pub enum TowerError {
    #[error("cannot parse rational from {0:?}")]
    BadRational(String),
    #[error("element is already a square at this level; tower would be degenerate")]
    SquareAdjoined,
    #[error("elements belong to incompatible towers")]
    TowerMismatch,
    #[error("division by zero field element")]
    DivisionByZero,
}

/// A tower of quadratic extensions of Q.
///
/// `levels[j]` holds the coordinates (length 2^j) of the adjoined element d_{j+1}
/// over level j. Empty levels means the tower is Q itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tower {
    levels: Vec<Vec<Rat>>,
}

impl Tower {
    pub fn rationals() -> Arc<Tower> {
        Arc::new(Tower { levels: Vec::new() })
    }

    /// Q(i), adjoining a square root of −1.
    pub fn gaussian() -> Arc<Tower> {
        Arc::new(Tower {
            levels: vec![vec![rat(-1)]],
        })
    }

    /// Q(i, √2), which contains the primitive eighth roots of unity.
    pub fn gaussian_sqrt2() -> Arc<Tower> {
        Arc::new(Tower {
            levels: vec![vec![rat(-1)], vec![rat(2), rat(0)]],
        })
    }

    pub fn height(&self) -> usize {
        self.levels.len()
    }

    pub fn dim(&self) -> usize {
        1 << self.levels.len()
    }

    /// Coordinates of each adjoined element, for serialization.
    pub fn descriptors(&self) -> &[Vec<Rat>] {
        &self.levels
    }

    /// Human-readable name like "Q(sqrt(-1))(sqrt(2))".
    pub fn describe(&self) -> String {
        let mut s = String::from("Q");
        for level in &self.levels {
            let nonzero = level.iter().rposition(|c| !c.is_zero());
            match nonzero {
                Some(0) => s.push_str(&format!("(sqrt({}))", rat_string(&level[0]))),
                Some(_) => {
                    let coords: Vec<String> = level.iter().map(rat_string).collect();
                    s.push_str(&format!("(sqrt([{}]))", coords.join(", ")));
                }
                None => s.push_str("(sqrt(0))"),
            }
        }
        s
    }

    /// True if `self` is an initial segment of `other`.
    pub fn is_prefix_of(&self, other: &Tower) -> bool {
        self.levels.len() <= other.levels.len() && self.levels == other.levels[..self.levels.len()]
    }

    /// Extends the tower by a square root of `d`, which must be a non-square
    /// element of this tower.
    pub fn extend(self: &Arc<Tower>, d: &FieldElement) -> Result<Arc<Tower>, TowerError> {
        if !d.tower.is_prefix_of(self) {
            return Err(TowerError::TowerMismatch);
        }
        let lifted = d.lift_to(self);
        if sqrt_coords(&self.levels, &lifted.coords).is_some() {
            return Err(TowerError::SquareAdjoined);
        }
        let mut levels = self.levels.clone();
        levels.push(lifted.coords);
        Ok(Arc::new(Tower { levels }))
    }

    pub fn zero(self: &Arc<Tower>) -> FieldElement {
        FieldElement {
            tower: self.clone(),
            coords: vec![Rat::zero(); self.dim()],
        }
    }

    pub fn one(self: &Arc<Tower>) -> FieldElement {
        self.from_rat(Rat::one())
    }

    pub fn from_rat(self: &Arc<Tower>, r: Rat) -> FieldElement {
        let mut coords = vec![Rat::zero(); self.dim()];
        coords[0] = r;
        FieldElement {
            tower: self.clone(),
            coords,
        }
    }

    pub fn from_i64(self: &Arc<Tower>, n: i64) -> FieldElement {
        self.from_rat(rat(n))
    }

    /// The j-th adjoined generator as an element (0-based).
    pub fn generator(self: &Arc<Tower>, j: usize) -> FieldElement {
        assert!(j < self.height());
        let mut coords = vec![Rat::zero(); self.dim()];
        coords[1 << j] = Rat::one();
        FieldElement {
            tower: self.clone(),
            coords,
        }
    }

    pub fn from_coords(self: &Arc<Tower>, coords: Vec<Rat>) -> FieldElement {
        assert_eq!(coords.len(), self.dim());
        FieldElement {
            tower: self.clone(),
            coords,
        }
    }
}

/// An element of a quadratic tower, as 2^h rational coordinates.
#[derive(Debug, Clone)]
pub struct FieldElement {
    tower: Arc<Tower>,
    coords: Vec<Rat>,
}

impl FieldElement {
    pub fn tower(&self) -> &Arc<Tower> {
        &self.tower
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rat::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.coords[1..].iter().all(Rat::is_zero)
    }

    /// The rational coordinate if the element lies in Q.
    pub fn as_rat(&self) -> Option<&Rat> {
        if self.is_rational() {
            Some(&self.coords[0])
        } else {
            None
        }
    }

    /// Lifts into a taller tower that this element's tower is a prefix of.
    /// The subfield basis occupies the low coordinate indices, so lifting is
    /// zero-padding.
    pub fn lift_to(&self, target: &Arc<Tower>) -> FieldElement {
        assert!(
            self.tower.is_prefix_of(target),
            "lift_to: tower is not a prefix of the target"
        );
        let mut coords = vec![Rat::zero(); target.dim()];
        coords[..self.coords.len()].clone_from_slice(&self.coords);
        FieldElement {
            tower: target.clone(),
            coords,
        }
    }

    fn unify(&self, other: &FieldElement) -> (FieldElement, FieldElement) {
        if self.tower == other.tower {
            (self.clone(), other.clone())
        } else if self.tower.is_prefix_of(&other.tower) {
            (self.lift_to(&other.tower), other.clone())
        } else if other.tower.is_prefix_of(&self.tower) {
            (self.clone(), other.lift_to(&self.tower))
        } else {
            panic!("incompatible towers in field arithmetic");
        }
    }

    pub fn add(&self, other: &FieldElement) -> FieldElement {
        let (mut a, b) = self.unify(other);
        for (x, y) in a.coords.iter_mut().zip(&b.coords) {
            *x += y;
        }
        a
    }

    pub fn sub(&self, other: &FieldElement) -> FieldElement {
        let (mut a, b) = self.unify(other);
        for (x, y) in a.coords.iter_mut().zip(&b.coords) {
            *x -= y;
        }
        a
    }

    pub fn neg(&self) -> FieldElement {
        FieldElement {
            tower: self.tower.clone(),
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &FieldElement) -> FieldElement {
        let (a, b) = self.unify(other);
        let coords = mul_coords(&a.tower.levels, &a.coords, &b.coords);
        FieldElement {
            tower: a.tower,
            coords,
        }
    }

    pub fn mul_rat(&self, r: &Rat) -> FieldElement {
        FieldElement {
            tower: self.tower.clone(),
            coords: self.coords.iter().map(|c| c * r).collect(),
        }
    }

    pub fn inv(&self) -> Result<FieldElement, TowerError> {
        if self.is_zero() {
            return Err(TowerError::DivisionByZero);
        }
        let coords = inv_coords(&self.tower.levels, &self.coords);
        Ok(FieldElement {
            tower: self.tower.clone(),
            coords,
        })
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement, TowerError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn square(&self) -> FieldElement {
        self.mul(self)
    }

    pub fn pow(&self, mut e: u32) -> FieldElement {
        let mut base = self.clone();
        let mut acc = self.tower.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.square();
            e >>= 1;
        }
        acc
    }

    /// Exact square root within the element's own tower, if one exists.
    ///
    /// The result is sign-normalized: its first nonzero coordinate is positive.
    pub fn sqrt(&self) -> Option<FieldElement> {
        let coords = sqrt_coords(&self.tower.levels, &self.coords)?;
        let mut r = FieldElement {
            tower: self.tower.clone(),
            coords,
        };
        if let Some(c) = r.coords.iter().find(|c| !c.is_zero()) {
            if c.is_negative() {
                r = r.neg();
            }
        }
        Some(r)
    }

    /// Total order on elements of compatible towers (coordinate-lexicographic).
    /// Used for canonical sorting; not compatible with field structure.
    pub fn cmp_lex(&self, other: &FieldElement) -> std::cmp::Ordering {
        let (a, b) = self.unify(other);
        a.coords.cmp(&b.coords)
    }

    pub fn json(&self) -> serde_json::Value {
        serde_json::json!({
            "tower": self
                .tower
                .descriptors()
                .iter()
                .map(|d| d.iter().map(rat_string).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "coords": self.coords.iter().map(rat_string).collect::<Vec<_>>(),
        })
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.unify(other);
        a.coords == b.coords
    }
}

impl Eq for FieldElement {}

impl std::hash::Hash for FieldElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        // hash only the trailing-nonzero part so that lifts agree
        let cut = self
            .coords
            .iter()
            .rposition(|c| !c.is_zero())
            .map_or(0, |p| p + 1);
        for c in &self.coords[..cut] {
            c.hash(state);
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (idx, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut mono = String::new();
            for j in 0..self.tower.height() {
                if idx & (1 << j) != 0 {
                    mono.push_str(&format!("g{j}"));
                }
            }
            if mono.is_empty() {
                parts.push(rat_string(c));
            } else if c.is_one() {
                parts.push(mono);
            } else {
                parts.push(format!("{}*{}", rat_string(c), mono));
            }
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

// ---- coordinate-level recursion ----
//
// A length-2^k coordinate slice over `levels[..k]` splits as (lo, hi) with
// value = lo + hi·g_k and g_k² = d_k = levels[k-1].

fn add_slices(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub_slices(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn mul_coords(levels: &[Vec<Rat>], p: &[Rat], q: &[Rat]) -> Vec<Rat> {
    if levels.is_empty() {
        return vec![&p[0] * &q[0]];
    }
    let (inner, d) = levels.split_at(levels.len() - 1);
    let d = &d[0];
    let h = p.len() / 2;
    let (a, b) = p.split_at(h);
    let (c, e) = q.split_at(h);
    let ac = mul_coords(inner, a, c);
    let be = mul_coords(inner, b, e);
    let ae = mul_coords(inner, a, e);
    let bc = mul_coords(inner, b, c);
    let bed = mul_coords(inner, &be, d);
    let mut out = add_slices(&ac, &bed);
    out.extend(add_slices(&ae, &bc));
    out
}

fn inv_coords(levels: &[Vec<Rat>], p: &[Rat]) -> Vec<Rat> {
    if levels.is_empty() {
        return vec![p[0].recip()];
    }
    let (inner, d) = levels.split_at(levels.len() - 1);
    let d = &d[0];
    let h = p.len() / 2;
    let (a, b) = p.split_at(h);
    // (a + bg)⁻¹ = (a − bg) / (a² − d·b²)
    let a2 = mul_coords(inner, a, a);
    let b2 = mul_coords(inner, b, b);
    let db2 = mul_coords(inner, d, &b2);
    let norm = sub_slices(&a2, &db2);
    let norm_inv = inv_coords(inner, &norm);
    let mut out = mul_coords(inner, a, &norm_inv);
    let negb: Vec<Rat> = b.iter().map(|c| -c).collect();
    out.extend(mul_coords(inner, &negb, &norm_inv));
    out
}

fn half_slice(p: &[Rat]) -> Vec<Rat> {
    let two = rat(2);
    p.iter().map(|c| c / &two).collect()
}

fn sqrt_coords(levels: &[Vec<Rat>], p: &[Rat]) -> Option<Vec<Rat>> {
    if levels.is_empty() {
        return rat_sqrt(&p[0]).map(|r| vec![r]);
    }
    let (inner, d) = levels.split_at(levels.len() - 1);
    let d = &d[0];
    let h = p.len() / 2;
    let (x, y) = p.split_at(h);
    if y.iter().all(Rat::is_zero) {
        // candidate in the subfield, or a subfield multiple of g
        if let Some(u) = sqrt_coords(inner, x) {
            let mut out = u;
            out.extend(vec![Rat::zero(); h]);
            return Some(out);
        }
        let dinv = inv_coords(inner, d);
        let xd = mul_coords(inner, x, &dinv);
        if let Some(v) = sqrt_coords(inner, &xd) {
            let mut out = vec![Rat::zero(); h];
            out.extend(v);
            return Some(out);
        }
        return None;
    }
    // r = u + vg with 2uv = y and u² + v²d = x ⇒ u² = (x ± √(x²−dy²))/2
    let x2 = mul_coords(inner, x, x);
    let y2 = mul_coords(inner, y, y);
    let dy2 = mul_coords(inner, d, &y2);
    let n = sub_slices(&x2, &dy2);
    let s = sqrt_coords(inner, &n)?;
    for sgn in [1i64, -1] {
        let signed: Vec<Rat> = if sgn == 1 {
            s.clone()
        } else {
            s.iter().map(|c| -c).collect()
        };
        let u2 = half_slice(&add_slices(x, &signed));
        if u2.iter().all(Rat::is_zero) {
            continue;
        }
        if let Some(u) = sqrt_coords(inner, &u2) {
            let two_u: Vec<Rat> = u.iter().map(|c| c * rat(2)).collect();
            let inv2u = inv_coords(inner, &two_u);
            let v = mul_coords(inner, y, &inv2u);
            let mut out = u;
            out.extend(v);
            return Some(out);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_sqrt_cases() {
        let q = Tower::rationals();
        assert_eq!(q.from_i64(4).sqrt(), Some(q.from_i64(2)));
        assert_eq!(q.from_i64(2).sqrt(), None);
        assert_eq!(q.from_rat(ratio(9, 4)).sqrt(), Some(q.from_rat(ratio(3, 2))));
        assert_eq!(q.from_i64(-4).sqrt(), None);
    }

    #[test]
    fn gaussian_arithmetic() {
        let qi = Tower::gaussian();
        let i = qi.generator(0);
        assert_eq!(i.square(), qi.from_i64(-1));
        // sqrt(-1) = i, sign-normalized
        assert_eq!(qi.from_i64(-1).sqrt(), Some(i.clone()));
        // (1+i)(1-i) = 2
        let a = qi.one().add(&i);
        let b = qi.one().sub(&i);
        assert_eq!(a.mul(&b), qi.from_i64(2));
        // inverse of 1+i is (1-i)/2
        assert_eq!(a.inv().unwrap(), b.mul_rat(&ratio(1, 2)));
    }

    #[test]
    fn zeta8_in_gaussian_sqrt2() {
        let t = Tower::gaussian_sqrt2();
        let i = t.generator(0);
        let s2 = t.generator(1);
        assert_eq!(s2.square(), t.from_i64(2));
        // ζ₈ = (1+i)/√2; ζ₈⁴ = −1
        let zeta = t.one().add(&i).div(&s2).unwrap();
        assert_eq!(zeta.pow(4), t.from_i64(-1));
        assert_eq!(zeta.square(), i);
        // sqrt(i) exists here and squares back to i
        let r = i.sqrt().expect("i is a square in Q(i,√2)");
        assert_eq!(r.square(), i);
    }

    #[test]
    fn rejects_square_extension() {
        let q = Tower::rationals();
        assert!(q.extend(&q.from_i64(4)).is_err());
        assert!(q.extend(&q.from_i64(5)).is_ok());
        let q5 = q.extend(&q.from_i64(5)).unwrap();
        let r5 = q5.from_i64(5).sqrt().expect("5 is a square in Q(√5)");
        assert_eq!(r5.square(), q5.from_i64(5));
    }

    #[test]
    fn lifting_across_prefix_towers() {
        let q = Tower::rationals();
        let qi = Tower::gaussian();
        let two = q.from_i64(2);
        let i = qi.generator(0);
        let sum = two.add(&i);
        assert_eq!(sum.tower().height(), 1);
        assert_eq!(sum.sub(&i), qi.from_i64(2));
    }

    #[test]
    fn squarefree_kernel_cases() {
        assert_eq!(squarefree_kernel(&rat(12)), BigInt::from(3));
        assert_eq!(squarefree_kernel(&rat(-18)), BigInt::from(-2));
        assert_eq!(squarefree_kernel(&ratio(1, 5)), BigInt::from(5));
        assert_eq!(squarefree_kernel(&ratio(49, 4)), BigInt::from(1));
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rat("3/4").unwrap(), ratio(3, 4));
        assert_eq!(parse_rat("-7").unwrap(), rat(-7));
        assert_eq!(rat_string(&ratio(-3, 4)), "-3/4");
        assert_eq!(rat_string(&rat(5)), "5");
        assert!(parse_rat("1/0").is_err());
    }
}
