//! Univariate polynomials over a tower field: division, gcd, squarefree part,
//! and distinct-root counts for binary forms.

use std::sync::Arc;

use crate::mpoly::MPoly;
use crate::tower::{FieldElement, Tower};

/// Dense univariate polynomial, coefficients ascending, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UPoly {
    tower: Arc<Tower>,
    coeffs: Vec<FieldElement>,
}

impl UPoly {
    pub fn new(tower: &Arc<Tower>, mut coeffs: Vec<FieldElement>) -> Self {
        while coeffs.last().is_some_and(FieldElement::is_zero) {
            coeffs.pop();
        }
        UPoly {
            tower: tower.clone(),
            coeffs,
        }
    }

    pub fn zero(tower: &Arc<Tower>) -> Self {
        UPoly {
            tower: tower.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn from_ints(tower: &Arc<Tower>, coeffs: &[i64]) -> Self {
        UPoly::new(tower, coeffs.iter().map(|&c| tower.from_i64(c)).collect())
    }

    /// Reads a one-variable MPoly.
    pub fn from_mpoly(f: &MPoly) -> Self {
        assert_eq!(f.nvars(), 1);
        let deg = f.degree().map_or(0, |d| d as usize);
        let mut coeffs = vec![f.tower().zero(); deg + 1];
        for (m, c) in f.terms() {
            coeffs[m.exps()[0] as usize] = c.clone();
        }
        UPoly::new(f.tower(), coeffs)
    }

    /// Sets variable `var` of a two-variable polynomial to 1; the result is
    /// univariate in the other variable.
    pub fn dehomogenize(f: &MPoly, var: usize) -> Self {
        assert_eq!(f.nvars(), 2);
        assert!(var < 2);
        let other = 1 - var;
        let deg = f.degree().map_or(0, |d| d as usize);
        let mut coeffs = vec![f.tower().zero(); deg + 1];
        for (m, c) in f.terms() {
            let e = m.exps()[other] as usize;
            coeffs[e] = coeffs[e].add(c);
        }
        UPoly::new(f.tower(), coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.tower.zero())
    }

    pub fn leading(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        let mut acc = self.tower.zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    pub fn derivative(&self) -> UPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.mul_rat(&crate::tower::rat(i as i64)))
            .collect();
        UPoly::new(&self.tower, coeffs)
    }

    pub fn monic(&self) -> UPoly {
        match self.leading() {
            None => self.clone(),
            Some(l) => {
                let li = l.inv().expect("leading coefficient is nonzero");
                UPoly::new(
                    &self.tower,
                    self.coeffs.iter().map(|c| c.mul(&li)).collect(),
                )
            }
        }
    }

    pub fn mul(&self, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero(&self.tower);
        }
        let mut coeffs = vec![self.tower.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        UPoly::new(&self.tower, coeffs)
    }

    pub fn sub(&self, other: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i).sub(&other.coeff(i))).collect();
        UPoly::new(&self.tower, coeffs)
    }

    /// Euclidean division: self = q·d + r with deg r < deg d.
    pub fn divrem(&self, d: &UPoly) -> (UPoly, UPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let dinv = d.leading().unwrap().inv().unwrap();
        let mut r = self.clone();
        let mut q = vec![self.tower.zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let c = r.leading().unwrap().mul(&dinv);
            let shift = rd - dd;
            q[shift] = c.clone();
            let mut sub = vec![self.tower.zero(); shift];
            sub.extend(d.coeffs.iter().map(|dc| dc.mul(&c)));
            r = r.sub(&UPoly::new(&self.tower, sub));
        }
        (UPoly::new(&self.tower, q), r)
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// f / gcd(f, f'), normalized monic.
    pub fn squarefree_part(&self) -> UPoly {
        assert!(!self.is_zero(), "squarefree part of zero");
        let g = self.gcd(&self.derivative());
        let (q, r) = self.divrem(&g);
        assert!(r.is_zero(), "gcd must divide");
        q.monic()
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).degree() == Some(0)
    }
}

/// Number of distinct roots of a nonzero binary form in P¹ over the algebraic
/// closure: distinct affine roots of f(1,t), plus the root at s=0 when the
/// pure t-power coefficient vanishes.
pub fn distinct_projective_roots(f: &MPoly) -> usize {
    assert_eq!(f.nvars(), 2);
    assert!(f.is_homogeneous() && !f.is_zero());
    let d = f.degree().unwrap() as usize;
    if d == 0 {
        return 0;
    }
    let u = UPoly::dehomogenize(f, 0);
    let affine = match u.degree() {
        None => 0, // f = c·s^d, handled by the infinity root below
        Some(0) => 0,
        Some(du) => du - u.gcd(&u.derivative()).degree().unwrap(),
    };
    let at_infinity = usize::from(u.degree().map_or(0, |du| du) < d);
    affine + at_infinity
}

/// A binary form of degree d is squarefree iff it has d distinct roots.
pub fn binary_form_squarefree(f: &MPoly) -> bool {
    distinct_projective_roots(f) == f.degree().unwrap() as usize
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::MPoly;
    use crate::tower::Tower;

    fn q() -> Arc<Tower> {
        Tower::rationals()
    }

    #[test]
    fn division_and_gcd() {
        let t = q();
        // (t−1)²(t+2) = t³ − 3t + 2
        let f = UPoly::from_ints(&t, &[2, -3, 0, 1]);
        let g = UPoly::from_ints(&t, &[-1, 1]); // t − 1
        let (quo, r) = f.divrem(&g);
        assert!(r.is_zero());
        assert_eq!(quo, UPoly::from_ints(&t, &[-2, 1, 1])); // (t−1)(t+2)
        let d = f.gcd(&f.derivative());
        assert_eq!(d, UPoly::from_ints(&t, &[-1, 1]));
    }

    #[test]
    fn squarefree_part_examples() {
        let t = q();
        let f = UPoly::from_ints(&t, &[2, -3, 0, 1]); // (t−1)²(t+2)
        assert_eq!(f.squarefree_part(), UPoly::from_ints(&t, &[-2, 1, 1]));
        let g = UPoly::from_ints(&t, &[1, 0, 0, 0, 1]); // t⁴+1
        assert_eq!(g.squarefree_part(), g);
        assert!(g.is_squarefree());
        assert!(!f.is_squarefree());
    }

    #[test]
    fn projective_root_counts() {
        let t = q();
        // st(s+t): three distinct roots
        let s_v = MPoly::var(2, 0, &t);
        let t_v = MPoly::var(2, 1, &t);
        let f = s_v.mul(&t_v).mul(&s_v.add(&t_v));
        assert_eq!(distinct_projective_roots(&f), 3);
        assert!(binary_form_squarefree(&f));
        // s²t²: two distinct roots, not squarefree
        let g = s_v.pow(2).mul(&t_v.pow(2));
        assert_eq!(distinct_projective_roots(&g), 2);
        assert!(!binary_form_squarefree(&g));
        // s⁴+t⁴ over Q: squarefree, 4 roots in closure
        let h = s_v.pow(4).add(&t_v.pow(4));
        assert_eq!(distinct_projective_roots(&h), 4);
        // pure power of s: single root at infinity of the dehomogenization
        let p = s_v.pow(3);
        assert_eq!(distinct_projective_roots(&p), 1);
    }

    #[test]
    fn eval_horner() {
        let t = q();
        let f = UPoly::from_ints(&t, &[1, -2, 1]); // (t−1)²
        assert!(f.eval(&t.from_i64(1)).is_zero());
        assert_eq!(f.eval(&t.from_i64(3)), t.from_i64(4));
    }
}
