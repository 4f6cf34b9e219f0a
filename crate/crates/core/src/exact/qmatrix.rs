//! Dense matrices over the rationals with exact Gauss-Jordan elimination.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

use num_traits::{One, Zero};

use super::rational::{primitive_scale, Rational};

/// Dense row-major matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> QMatrix {
        QMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> QMatrix {
        let mut m = QMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    /// Build from row vectors, all of equal length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> QMatrix {
        assert!(!rows.is_empty(), "need at least one row");
        let cols = rows[0].len();
        let mut data = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r);
        }
        QMatrix {
            rows: nrows,
            cols,
            data,
        }
    }

    pub fn diagonal(entries: Vec<Rational>) -> QMatrix {
        let n = entries.len();
        let mut m = QMatrix::zeros(n, n);
        for (i, e) in entries.into_iter().enumerate() {
            m[(i, i)] = e;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> QMatrix {
        let mut m = QMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(j, i)] = self[(i, j)].clone();
            }
        }
        m
    }

    pub fn mul(&self, rhs: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = QMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        let prod = a * b;
                        out[(i, j)] += prod;
                    }
                }
            }
        }
        out
    }

    /// Matrix-vector product M*x.
    pub fn mul_vec(&self, x: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, x.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .map(|(a, b)| a * b)
                    .fold(Rational::zero(), |acc, t| acc + t)
            })
            .collect()
    }

    /// Row-vector product v*M.
    pub fn left_mul(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.rows, v.len(), "dimension mismatch");
        let mut out = vec![Rational::zero(); self.cols];
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, out_j) in out.iter_mut().enumerate() {
                let t = c * &self[(i, j)];
                *out_j += t;
            }
        }
        out
    }

    /// Reduced row-echelon form and the list of pivot columns.
    pub fn rref(&self) -> (QMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0usize;
        for col in 0..m.cols {
            if lead >= m.rows {
                break;
            }
            let Some(pivot_row) = (lead..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(lead, pivot_row);
            let inv = m[(lead, col)].recip();
            for j in col..m.cols {
                let v = &m[(lead, j)] * &inv;
                m[(lead, j)] = v;
            }
            for r in 0..m.rows {
                if r == lead || m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone();
                for j in col..m.cols {
                    let t = &m[(lead, j)] * &factor;
                    let v = &m[(r, j)] - &t;
                    m[(r, j)] = v;
                }
            }
            pivots.push(col);
            lead += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel {x : M*x = 0}. Each basis vector is scaled
    /// to primitive integer form with positive first nonzero entry, and the
    /// set is reduced so the basis is deterministic.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![Rational::zero(); self.cols];
            v[f] = Rational::one();
            for (pi, &pc) in pivots.iter().enumerate() {
                v[pc] = -&r[(pi, f)];
            }
            basis.push(v);
        }
        if basis.is_empty() {
            return basis;
        }
        let (reduced, _) = QMatrix::from_rows(basis).rref();
        let mut out = Vec::new();
        for i in 0..reduced.rows {
            let mut v = reduced.row(i).to_vec();
            if v.iter().all(Zero::is_zero) {
                continue;
            }
            primitive_scale(&mut v);
            out.push(v);
        }
        out
    }

    /// Basis of the left kernel {v : v*M = 0}, normalized like `kernel`.
    pub fn left_kernel(&self) -> Vec<Vec<Rational>> {
        self.transpose().kernel()
    }

    /// One exact solution of M*x = b with free variables set to zero, or
    /// None when the system is inconsistent.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(self.rows, b.len(), "dimension mismatch");
        let mut aug = QMatrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (pi, &pc) in pivots.iter().enumerate() {
            x[pc] = r[(pi, self.cols)].clone();
        }
        Some(x)
    }

    /// Whether v lies in the span of the rows of M.
    pub fn in_row_space(&self, v: &[Rational]) -> bool {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        let mut rows: Vec<Vec<Rational>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        let base_rank = self.rank();
        rows.push(v.to_vec());
        QMatrix::from_rows(rows).rank() == base_rank
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for k in 0..self.cols {
            self.data.swap(i * self.cols + k, j * self.cols + k);
        }
    }
}

impl Index<(usize, usize)> for QMatrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat_int;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat_int(x)).collect()
    }

    #[test]
    fn kernel_of_difference() {
        let m = QMatrix::from_rows(vec![ints(&[1, -1])]);
        assert_eq!(m.kernel(), vec![ints(&[1, 1])]);
    }

    #[test]
    fn full_rank_identity() {
        assert_eq!(QMatrix::identity(3).rank(), 3);
        assert!(QMatrix::identity(3).kernel().is_empty());
    }

    #[test]
    fn kernel_by_hand_elimination() {
        // RREF is [[1,0,1],[0,1,1]]; kernel is spanned by (-1,-1,1), which
        // normalizes to (1,1,-1) under the positive-leading-entry convention.
        let m = QMatrix::from_rows(vec![ints(&[1, 2, 3]), ints(&[0, 1, 1])]);
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], ints(&[1, 1, -1]));
        assert_eq!(m.mul_vec(&k[0]), ints(&[0, 0]));
    }

    #[test]
    fn solve_and_consistency() {
        let m = QMatrix::from_rows(vec![ints(&[1, 2]), ints(&[2, 4])]);
        assert_eq!(m.solve(&ints(&[3, 6])), Some(ints(&[3, 0])));
        assert_eq!(m.solve(&ints(&[3, 7])), None);
    }

    #[test]
    fn row_space_membership() {
        let m = QMatrix::from_rows(vec![ints(&[1, 0, 1]), ints(&[0, 1, 1])]);
        assert!(m.in_row_space(&ints(&[2, 3, 5])));
        assert!(!m.in_row_space(&ints(&[0, 0, 1])));
    }

    #[test]
    fn left_mul_matches_transpose() {
        let m = QMatrix::from_rows(vec![ints(&[1, 2, 3]), ints(&[4, 5, 6])]);
        let v = ints(&[7, -1]);
        assert_eq!(m.left_mul(&v), m.transpose().mul_vec(&v));
    }
}
