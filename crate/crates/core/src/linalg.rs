//! Exact dense linear algebra over a tower field: echelon forms, rank,
//! kernels, determinants, and unique-solution solves.

use std::sync::Arc;

use crate::tower::{FieldElement, Tower};

/// Row-major matrix of field elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    tower: Arc<Tower>,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl Mat {
    pub fn zero(tower: &Arc<Tower>, rows: usize, cols: usize) -> Self {
        Mat {
            tower: tower.clone(),
            rows,
            cols,
            data: vec![tower.zero(); rows * cols],
        }
    }

    pub fn identity(tower: &Arc<Tower>, n: usize) -> Self {
        let mut m = Mat::zero(tower, n, n);
        for i in 0..n {
            *m.at_mut(i, i) = tower.one();
        }
        m
    }

    pub fn from_rows(tower: &Arc<Tower>, rows: Vec<Vec<FieldElement>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c));
        Mat {
            tower: tower.clone(),
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().map(|e| e.lift_to(tower)).collect(),
        }
    }

    pub fn from_i64_rows(tower: &Arc<Tower>, rows: &[Vec<i64>]) -> Self {
        Mat::from_rows(
            tower,
            rows.iter()
                .map(|r| r.iter().map(|&x| tower.from_i64(x)).collect())
                .collect(),
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn tower(&self) -> &Arc<Tower> {
        &self.tower
    }

    pub fn at(&self, i: usize, j: usize) -> &FieldElement {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut FieldElement {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zero(&self.tower, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *t.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows);
        let mut out = Mat::zero(&self.tower, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    *out.at_mut(i, j) = out.at(i, j).add(&a.mul(b));
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = self.tower.zero();
                for j in 0..self.cols {
                    acc = acc.add(&self.at(i, j).mul(&v[j]));
                }
                acc
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Reduced row-echelon form and pivot columns.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            let Some(p) = (r..m.rows).find(|&i| !m.at(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.at(r, c).inv().unwrap();
            for j in c..m.cols {
                *m.at_mut(r, j) = m.at(r, j).mul(&inv);
            }
            for i in 0..m.rows {
                if i == r || m.at(i, c).is_zero() {
                    continue;
                }
                let f = m.at(i, c).clone();
                for j in c..m.cols {
                    *m.at_mut(i, j) = m.at(i, j).sub(&f.mul(m.at(r, j)));
                }
            }
            pivots.push(c);
            r += 1;
            if r == m.rows {
                break;
            }
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel {x : Mx = 0}, one vector per free column,
    /// with the free coordinate set to 1.
    pub fn kernel(&self) -> Vec<Vec<FieldElement>> {
        let (e, pivots) = self.rref();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = vec![self.tower.zero(); self.cols];
            v[free] = self.tower.one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = e.at(row, free).neg();
            }
            basis.push(v);
        }
        basis
    }

    pub fn det(&self) -> FieldElement {
        assert_eq!(self.rows, self.cols);
        let mut m = self.clone();
        let mut det = self.tower.one();
        for c in 0..m.cols {
            let Some(p) = (c..m.rows).find(|&i| !m.at(i, c).is_zero()) else {
                return self.tower.zero();
            };
            if p != c {
                m.swap_rows(c, p);
                det = det.neg();
            }
            let pivot = m.at(c, c).clone();
            det = det.mul(&pivot);
            let inv = pivot.inv().unwrap();
            for i in c + 1..m.rows {
                if m.at(i, c).is_zero() {
                    continue;
                }
                let f = m.at(i, c).mul(&inv);
                for j in c..m.cols {
                    *m.at_mut(i, j) = m.at(i, j).sub(&f.mul(m.at(c, j)));
                }
            }
        }
        det
    }

    /// Solves Mx = b when the solution is unique.
    pub fn solve_unique(&self, b: &[FieldElement]) -> Option<Vec<FieldElement>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Mat::zero(&self.tower, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *aug.at_mut(i, j) = self.at(i, j).clone();
            }
            *aug.at_mut(i, self.cols) = b[i].clone().lift_to(&self.tower);
        }
        let (e, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // inconsistent
        }
        if pivots.len() != self.cols {
            return None; // underdetermined
        }
        let mut x = vec![self.tower.zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = e.at(row, self.cols).clone();
        }
        Some(x)
    }
}
