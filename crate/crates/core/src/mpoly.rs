//! Sparse multivariate polynomials over a quadratic tower field.
//!
//! Terms live in a BTreeMap keyed by monomial under graded lexicographic
//! order (degree first, then exponent vector with variable 0 strongest), so
//! the leading term is the map's last entry and iteration order is canonical.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use crate::tower::{rat_string, FieldElement, Rat, Tower};

/// Exponent vector with graded-lex ordering.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mono {
    exps: Vec<u16>,
}

impl Mono {
    pub fn new(exps: Vec<u16>) -> Self {
        Mono { exps }
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    fn mul(&self, other: &Mono) -> Mono {
        Mono {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Componentwise quotient if `other` divides `self`.
    fn div(&self, other: &Mono) -> Option<Mono> {
        let mut exps = Vec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            if a < b {
                return None;
            }
            exps.push(a - b);
        }
        Some(Mono { exps })
    }

    fn halve(&self) -> Option<Mono> {
        let mut exps = Vec::with_capacity(self.exps.len());
        for &e in &self.exps {
            if e % 2 != 0 {
                return None;
            }
            exps.push(e / 2);
        }
        Some(Mono { exps })
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.degree(), &self.exps).cmp(&(other.degree(), &other.exps))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone)]
pub struct MPoly {
    nvars: usize,
    tower: Arc<Tower>,
    terms: BTreeMap<Mono, FieldElement>,
}

/// Mathematical equality: towers may differ as long as one extends the other.
impl PartialEq for MPoly {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars
            && self.terms.len() == other.terms.len()
            && self
                .terms
                .iter()
                .zip(other.terms.iter())
                .all(|((ma, ca), (mb, cb))| ma == mb && ca == cb)
    }
}

impl Eq for MPoly {}

impl MPoly {
    pub fn zero(nvars: usize, tower: &Arc<Tower>) -> Self {
        MPoly {
            nvars,
            tower: tower.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: FieldElement) -> Self {
        let tower = c.tower().clone();
        let mut p = MPoly::zero(nvars, &tower);
        p.add_term(Mono::new(vec![0; nvars]), c);
        p
    }

    pub fn var(nvars: usize, i: usize, tower: &Arc<Tower>) -> Self {
        assert!(i < nvars);
        let mut exps = vec![0u16; nvars];
        exps[i] = 1;
        let mut p = MPoly::zero(nvars, tower);
        p.add_term(Mono::new(exps), tower.one());
        p
    }

    /// Builds from integer-coefficient terms given as (exponents, coefficient).
    pub fn from_int_terms(nvars: usize, tower: &Arc<Tower>, terms: &[(&[u16], i64)]) -> Self {
        let mut p = MPoly::zero(nvars, tower);
        for (exps, c) in terms {
            assert_eq!(exps.len(), nvars);
            p.add_term(Mono::new(exps.to_vec()), tower.from_i64(*c));
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn tower(&self) -> &Arc<Tower> {
        &self.tower
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Mono::degree)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Mono::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn leading(&self) -> Option<(&Mono, &FieldElement)> {
        self.terms.iter().next_back()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &FieldElement)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mono: &Mono) -> FieldElement {
        self.terms
            .get(mono)
            .cloned()
            .unwrap_or_else(|| self.tower.zero())
    }

    fn lift_tower(&mut self, target: &Arc<Tower>) {
        if &self.tower == target {
            return;
        }
        assert!(self.tower.is_prefix_of(target), "incompatible towers");
        let terms = std::mem::take(&mut self.terms);
        self.terms = terms
            .into_iter()
            .map(|(m, c)| (m, c.lift_to(target)))
            .collect();
        self.tower = target.clone();
    }

    fn common_tower(&self, other: &MPoly) -> Arc<Tower> {
        if self.tower.is_prefix_of(&other.tower) {
            other.tower.clone()
        } else {
            assert!(other.tower.is_prefix_of(&self.tower), "incompatible towers");
            self.tower.clone()
        }
    }

    pub fn add_term(&mut self, mono: Mono, c: FieldElement) {
        assert_eq!(mono.exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        if !c.tower().is_prefix_of(&self.tower) {
            let t = c.tower().clone();
            self.lift_tower(&t);
        }
        let c = c.lift_to(&self.tower);
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        assert_eq!(self.nvars, other.nvars);
        let tower = self.common_tower(other);
        let mut out = self.clone();
        out.lift_tower(&tower);
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MPoly {
        MPoly {
            nvars: self.nvars,
            tower: self.tower.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        assert_eq!(self.nvars, other.nvars);
        let tower = self.common_tower(other);
        let mut out = MPoly::zero(self.nvars, &tower);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca.mul(cb));
            }
        }
        out
    }

    pub fn mul_elem(&self, c: &FieldElement) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.nvars, &self.tower);
        }
        let mut out = MPoly::zero(self.nvars, &self.common_tower_elem(c));
        for (m, a) in &self.terms {
            out.add_term(m.clone(), a.mul(c));
        }
        out
    }

    fn common_tower_elem(&self, c: &FieldElement) -> Arc<Tower> {
        if self.tower.is_prefix_of(c.tower()) {
            c.tower().clone()
        } else {
            self.tower.clone()
        }
    }

    pub fn mul_rat(&self, r: &Rat) -> MPoly {
        if r.is_zero() {
            return MPoly::zero(self.nvars, &self.tower);
        }
        MPoly {
            nvars: self.nvars,
            tower: self.tower.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.mul_rat(r)))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut acc = MPoly::constant(self.nvars, self.tower.one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn partial(&self, i: usize) -> MPoly {
        assert!(i < self.nvars);
        let mut out = MPoly::zero(self.nvars, &self.tower);
        for (m, c) in &self.terms {
            let e = m.exps[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.exps.clone();
            exps[i] = e - 1;
            out.add_term(Mono::new(exps), c.mul_rat(&Rat::from_integer(e.into())));
        }
        out
    }

    pub fn eval(&self, point: &[FieldElement]) -> FieldElement {
        assert_eq!(point.len(), self.nvars);
        let mut acc = self.tower.zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in m.exps.iter().enumerate() {
                if e > 0 {
                    term = term.mul(&point[i].pow(e as u32));
                }
            }
            acc = acc.add(&term);
        }
        acc
    }

    /// Substitutes `subs[i]` for variable i. All substituents must share a
    /// variable count, which becomes the result's.
    pub fn substitute(&self, subs: &[MPoly]) -> MPoly {
        assert_eq!(subs.len(), self.nvars);
        let new_nvars = subs.first().map_or(0, MPoly::nvars);
        assert!(subs.iter().all(|s| s.nvars == new_nvars));
        let mut out = MPoly::zero(new_nvars, &self.tower);
        for (m, c) in &self.terms {
            let mut term = MPoly::constant(new_nvars, c.clone());
            for (i, &e) in m.exps.iter().enumerate() {
                if e > 0 {
                    term = term.mul(&subs[i].pow(e as u32));
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// Writes f as c·g² with g monic, if f is a perfect square times its
    /// leading coefficient. Returns (c, g).
    pub fn square_decompose(&self) -> Option<(FieldElement, MPoly)> {
        if self.is_zero() {
            return Some((self.tower.one(), self.clone()));
        }
        let (lm, lc) = self.leading().unwrap();
        let (lm, lc) = (lm.clone(), lc.clone());
        let half = lm.halve()?;
        let f1 = self.mul_elem(&lc.inv().expect("leading coefficient is nonzero"));
        let mut g = MPoly::zero(self.nvars, &f1.tower);
        g.add_term(half.clone(), f1.tower.one());
        loop {
            let r = f1.sub(&g.mul(&g));
            let Some((rm, rc)) = r.leading() else {
                return Some((lc, g));
            };
            let q = rm.div(&half)?;
            if q >= half {
                // quotient at or above LT(g) cannot appear in a correction term
                return None;
            }
            g.add_term(q, rc.mul_rat(&crate::tower::ratio(1, 2)));
        }
    }

    /// Scales a rational-coefficient polynomial to coprime integer
    /// coefficients with positive leading coefficient.
    pub fn primitive_integer(&self) -> MPoly {
        use num_bigint::BigInt;
        use num_integer::Integer;
        if self.is_zero() {
            return self.clone();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for (_, c) in &self.terms {
            let r = c.as_rat().expect("primitive_integer needs rational coefficients");
            num_gcd = num_gcd.gcd(r.numer());
            den_lcm = den_lcm.lcm(r.denom());
        }
        let mut scale = Rat::new(den_lcm, num_gcd);
        let lead = self.leading().unwrap().1.as_rat().unwrap();
        if (lead * &scale).is_negative() {
            scale = -scale;
        }
        self.mul_rat(&scale)
    }

    /// Terms in descending graded-lex order as JSON.
    pub fn json(&self) -> serde_json::Value {
        let terms: Vec<_> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| {
                serde_json::json!({
                    "exps": m.exps,
                    "coeff": coeff_json(c),
                })
            })
            .collect();
        serde_json::json!({ "nvars": self.nvars, "terms": terms })
    }

    pub fn display(&self, names: &[&str]) -> String {
        assert_eq!(names.len(), self.nvars);
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (m, c) in self.terms.iter().rev() {
            let mono: Vec<String> = m
                .exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        names[i].to_string()
                    } else {
                        format!("{}^{}", names[i], e)
                    }
                })
                .collect();
            let mono = mono.join("*");
            let coeff = if let Some(r) = c.as_rat() {
                rat_string(r)
            } else {
                format!("({c})")
            };
            let piece = if mono.is_empty() {
                coeff
            } else if coeff == "1" {
                mono
            } else if coeff == "-1" {
                format!("-{mono}")
            } else {
                format!("{coeff}*{mono}")
            };
            if out.is_empty() {
                out = piece;
            } else if let Some(rest) = piece.strip_prefix('-') {
                out = format!("{out} - {rest}");
            } else {
                out = format!("{out} + {piece}");
            }
        }
        out
    }
}

fn coeff_json(c: &FieldElement) -> serde_json::Value {
    if let Some(r) = c.as_rat() {
        serde_json::Value::String(rat_string(r))
    } else {
        c.json()
    }
}

/// Determinant of a 4×4 polynomial matrix by cofactor expansion along the
/// given row (0..4). Any row gives the same answer; tests exploit that.
pub fn poly_det4(m: &[Vec<MPoly>], row: usize) -> MPoly {
    assert_eq!(m.len(), 4);
    assert!(m.iter().all(|r| r.len() == 4));
    det_cofactor(m, row)
}

fn det_cofactor(m: &[Vec<MPoly>], row: usize) -> MPoly {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let row = row % n;
    let nvars = m[0][0].nvars();
    let tower = m[0][0].tower().clone();
    let mut acc = MPoly::zero(nvars, &tower);
    for j in 0..n {
        if m[row][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<MPoly>> = m
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != row)
            .map(|(_, r)| {
                r.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let term = m[row][j].mul(&det_cofactor(&minor, 0));
        if (row + j) % 2 == 0 {
            acc = acc.add(&term);
        } else {
            acc = acc.sub(&term);
        }
    }
    acc
}

/// Restricts a polynomial in 4 variables to the plane Σaᵢxᵢ = 0.
///
/// The pivot is the first index with aᵢ ≠ 0; the three remaining coordinates,
/// in increasing index order, become the parameters of the result.
pub fn restrict_to_plane(f: &MPoly, plane: &[FieldElement]) -> MPoly {
    assert_eq!(f.nvars(), 4);
    assert_eq!(plane.len(), 4);
    let pivot = plane
        .iter()
        .position(|a| !a.is_zero())
        .expect("zero plane");
    let tower = f.tower().clone();
    let mut subs = Vec::with_capacity(4);
    let mut param = 0usize;
    let mut pivot_expr = MPoly::zero(3, &tower);
    for (j, a) in plane.iter().enumerate() {
        if j == pivot {
            subs.push(MPoly::zero(3, &tower)); // placeholder, filled below
            continue;
        }
        let v = MPoly::var(3, param, &tower);
        if !a.is_zero() {
            let ratio = a.div(&plane[pivot]).unwrap().neg();
            pivot_expr = pivot_expr.add(&v.mul_elem(&ratio));
        }
        subs.push(v);
        param += 1;
    }
    subs[pivot] = pivot_expr;
    f.substitute(&subs)
}

/// Maps a point of the plane Σaᵢxᵢ = 0 to the parameter coordinates used by
/// [`restrict_to_plane`]: drop the pivot coordinate.
pub fn plane_coordinates(point: &[FieldElement], plane: &[FieldElement]) -> Vec<FieldElement> {
    let pivot = plane
        .iter()
        .position(|a| !a.is_zero())
        .expect("zero plane");
    point
        .iter()
        .enumerate()
        .filter(|(j, _)| *j != pivot)
        .map(|(_, c)| c.clone())
        .collect()
}

/// Restricts a polynomial to the line spanned by `a` and `b`: substitutes
/// xᵢ = s·aᵢ + t·bᵢ, giving a binary form in (s, t).
pub fn restrict_to_line(f: &MPoly, a: &[FieldElement], b: &[FieldElement]) -> MPoly {
    assert_eq!(a.len(), f.nvars());
    assert_eq!(b.len(), f.nvars());
    let tower = f.tower().clone();
    let s = MPoly::var(2, 0, &tower);
    let t = MPoly::var(2, 1, &tower);
    let subs: Vec<MPoly> = a
        .iter()
        .zip(b)
        .map(|(ai, bi)| s.mul_elem(ai).add(&t.mul_elem(bi)))
        .collect();
    f.substitute(&subs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tower::rat;

    fn q() -> Arc<Tower> {
        Tower::rationals()
    }

    #[test]
    fn graded_lex_order() {
        // x² > xy > y² > x > y > 1, and degree dominates
        let m = |a, b| Mono::new(vec![a, b]);
        assert!(m(2, 0) > m(1, 1));
        assert!(m(1, 1) > m(0, 2));
        assert!(m(0, 2) > m(1, 0));
        assert!(m(0, 3) > m(2, 0));
    }

    #[test]
    fn arithmetic_and_leading_term() {
        let t = q();
        let x = MPoly::var(2, 0, &t);
        let y = MPoly::var(2, 1, &t);
        let f = x.add(&y).mul(&x.sub(&y)); // x² − y²
        assert_eq!(f.num_terms(), 2);
        assert_eq!(f.leading().unwrap().0, &Mono::new(vec![2, 0]));
        let g = f.add(&y.mul(&y)); // x²
        assert_eq!(g, x.mul(&x));
    }

    #[test]
    fn eval_matches_structure() {
        let t = q();
        let f = MPoly::from_int_terms(3, &t, &[(&[2, 0, 0], 1), (&[0, 1, 1], -3), (&[0, 0, 0], 7)]);
        let p = [t.from_i64(2), t.from_i64(5), t.from_i64(-1)];
        // 4 + 15 + 7
        assert_eq!(f.eval(&p), t.from_i64(26));
    }

    #[test]
    fn partial_derivative() {
        let t = q();
        let f = MPoly::from_int_terms(2, &t, &[(&[3, 1], 2)]); // 2x³y
        let fx = f.partial(0);
        assert_eq!(
            fx,
            MPoly::from_int_terms(2, &t, &[(&[2, 1], 6)])
        );
        assert_eq!(f.partial(1), MPoly::from_int_terms(2, &t, &[(&[3, 0], 2)]));
    }

    #[test]
    fn substitution_is_linear_change() {
        let t = q();
        let f = MPoly::from_int_terms(2, &t, &[(&[2, 0], 1), (&[0, 2], 1)]); // x² + y²
        let s = MPoly::var(1, 0, &t);
        // x → s, y → 2s gives 5s²
        let g = f.substitute(&[s.clone(), s.mul_rat(&rat(2))]);
        assert_eq!(g, MPoly::from_int_terms(1, &t, &[(&[2], 5)]));
    }

    #[test]
    fn square_decompose_recovers_root() {
        let t = q();
        // 3(x + 2y)² = 3x² + 12xy + 12y²
        let f = MPoly::from_int_terms(2, &t, &[(&[2, 0], 3), (&[1, 1], 12), (&[0, 2], 12)]);
        let (c, g) = f.square_decompose().expect("perfect square");
        assert_eq!(c, t.from_i64(3));
        assert_eq!(g, MPoly::from_int_terms(2, &t, &[(&[1, 0], 1), (&[0, 1], 2)]));
        assert_eq!(g.mul(&g).mul_elem(&c), f);
        // not a square
        let h = MPoly::from_int_terms(2, &t, &[(&[2, 0], 1), (&[0, 1], 1)]);
        assert!(h.square_decompose().is_none());
        let k = MPoly::from_int_terms(2, &t, &[(&[2, 0], 1), (&[1, 1], 1), (&[0, 2], 1)]);
        assert!(k.square_decompose().is_none());
    }

    #[test]
    fn primitive_integer_normalization() {
        let t = q();
        let f = MPoly::from_int_terms(2, &t, &[(&[2, 0], -4), (&[0, 2], -6)])
            .mul_rat(&crate::tower::ratio(1, 10));
        let g = f.primitive_integer();
        assert_eq!(
            g,
            MPoly::from_int_terms(2, &t, &[(&[2, 0], 2), (&[0, 2], 3)])
        );
    }

    #[test]
    fn display_ordering() {
        let t = q();
        let f = MPoly::from_int_terms(2, &t, &[(&[0, 0], 1), (&[2, 0], -1), (&[1, 1], 2)]);
        assert_eq!(f.display(&["x", "y"]), "-x^2 + 2*x*y + 1");
    }

    #[test]
    fn det4_identity_and_row_agreement() {
        let t = q();
        let one = MPoly::constant(4, t.one());
        let zero = MPoly::zero(4, &t);
        let mut id = vec![vec![zero.clone(); 4]; 4];
        for (i, row) in id.iter_mut().enumerate() {
            row[i] = one.clone();
        }
        assert_eq!(poly_det4(&id, 0), one);
        // a matrix with polynomial entries: all expansion rows agree
        let v: Vec<MPoly> = (0..4).map(|i| MPoly::var(4, i, &t)).collect();
        let mut m = vec![vec![zero.clone(); 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                m[i][j] = if i == j {
                    v[i].mul(&v[i])
                } else {
                    v[i].mul(&v[j]).add(&one)
                };
            }
        }
        let d0 = poly_det4(&m, 0);
        for row in 1..4 {
            assert_eq!(poly_det4(&m, row), d0);
        }
    }

    #[test]
    fn plane_restriction_convention() {
        let t = q();
        // f = x, plane x = 0 → 0
        let x = MPoly::var(4, 0, &t);
        let plane = [t.one(), t.zero(), t.zero(), t.zero()];
        assert!(restrict_to_plane(&x, &plane).is_zero());
        // x⁴+y⁴+z⁴+w⁴ on w = 0 → s⁴+t⁴+u⁴
        let f = MPoly::from_int_terms(
            4,
            &t,
            &[(&[4, 0, 0, 0], 1), (&[0, 4, 0, 0], 1), (&[0, 0, 4, 0], 1), (&[0, 0, 0, 4], 1)],
        );
        let w_plane = [t.zero(), t.zero(), t.zero(), t.one()];
        let g = restrict_to_plane(&f, &w_plane);
        let expect =
            MPoly::from_int_terms(3, &t, &[(&[4, 0, 0], 1), (&[0, 4, 0], 1), (&[0, 0, 4], 1)]);
        assert_eq!(g, expect);
    }

    #[test]
    fn restriction_is_multiplicative() {
        let t = q();
        let f = MPoly::from_int_terms(4, &t, &[(&[1, 1, 0, 0], 1), (&[0, 0, 1, 1], 2)]);
        let g = MPoly::from_int_terms(4, &t, &[(&[2, 0, 0, 0], 3), (&[0, 0, 0, 2], -1)]);
        let plane = [t.from_i64(1), t.from_i64(2), t.from_i64(-1), t.from_i64(5)];
        let lhs = restrict_to_plane(&f.mul(&g), &plane);
        let rhs = restrict_to_plane(&f, &plane).mul(&restrict_to_plane(&g, &plane));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn line_restriction_binary_form() {
        let t = q();
        let f = MPoly::from_int_terms(4, &t, &[(&[4, 0, 0, 0], 1), (&[0, 0, 0, 4], 1)]);
        let a = [t.from_i64(1), t.from_i64(0), t.from_i64(0), t.from_i64(0)];
        let b = [t.from_i64(0), t.from_i64(0), t.from_i64(0), t.from_i64(1)];
        let r = restrict_to_line(&f, &a, &b);
        let expect = MPoly::from_int_terms(2, &t, &[(&[4, 0], 1), (&[0, 4], 1)]);
        assert_eq!(r, expect);
    }
}
