use std::fmt;
use std::ops::{Add, Mul};

use serde::{Deserialize, Serialize};

use super::F2Vector;
use crate::error::MAX_QUBITS;

/// A dense row-major matrix over F₂ with at most [`MAX_QUBITS`] columns.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct F2Matrix {
    cols: usize,
    rows: Vec<F2Vector>,
}

impl F2Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        assert!(cols <= MAX_QUBITS);
        Self {
            cols,
            rows: vec![F2Vector::zero(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            cols: n,
            rows: (0..n).map(|i| F2Vector::unit(n, i)).collect(),
        }
    }

    pub fn from_rows(cols: usize, rows: Vec<F2Vector>) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self { cols, rows }
    }

    /// Builds a square-or-tall matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(columns: &[F2Vector]) -> Self {
        let cols = columns.len();
        let nrows = columns.first().map_or(0, F2Vector::len);
        assert!(columns.iter().all(|c| c.len() == nrows), "ragged columns");
        let mut m = Self::zero(nrows, cols);
        for (j, c) in columns.iter().enumerate() {
            for i in c.ones() {
                m.set(i, j, true);
            }
        }
        m
    }

    /// Parses rows of `0`/`1` characters, e.g. `["01", "00"]`.
    pub fn from_strs(rows: &[&str]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| {
                let comps: Vec<bool> = r.chars().map(|c| c == '1').collect();
                assert_eq!(comps.len(), cols, "ragged rows");
                F2Vector::from_components(&comps)
            })
            .collect();
        Self { cols, rows }
    }

    #[inline]
    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.nrows() == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.rows[i].set(j, value);
    }

    pub fn row(&self, i: usize) -> F2Vector {
        self.rows[i]
    }

    pub fn rows(&self) -> &[F2Vector] {
        &self.rows
    }

    pub fn column(&self, j: usize) -> F2Vector {
        let mut c = F2Vector::zero(self.nrows());
        for (i, r) in self.rows.iter().enumerate() {
            if r.get(j) {
                c.set(i, true);
            }
        }
        c
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(F2Vector::is_zero)
    }

    /// Entry (i, j) vanishes whenever i ≤ j.
    pub fn is_strictly_lower_triangular(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, r)| {
            // Row i may only use columns 0..i, i.e. the top i bits.
            let allowed = if i == 0 {
                0
            } else {
                ((1u32 << i) - 1) << (self.cols - i)
            };
            r.bits() & !allowed == 0
        })
    }

    pub fn mul_vec(&self, v: &F2Vector) -> F2Vector {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        let mut out = F2Vector::zero(self.nrows());
        for (i, r) in self.rows.iter().enumerate() {
            if r.dot(v) {
                out.set(i, true);
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.cols, self.nrows());
        for (j, r) in self.rows.iter().enumerate() {
            for i in r.ones() {
                t.set(i, j, true);
            }
        }
        t
    }

    pub fn vstack(mats: &[F2Matrix]) -> Self {
        let cols = mats.first().map_or(0, F2Matrix::ncols);
        assert!(mats.iter().all(|m| m.cols == cols), "column mismatch");
        Self {
            cols,
            rows: mats.iter().flat_map(|m| m.rows.iter().copied()).collect(),
        }
    }

    /// Reduced row echelon form together with the pivot column of each
    /// nonzero row.
    pub fn rref(&self) -> (F2Matrix, Vec<usize>) {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            let Some(p) = (r..rows.len()).find(|&i| rows[i].get(c)) else {
                continue;
            };
            rows.swap(r, p);
            let pivot_row = rows[r];
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && row.get(c) {
                    *row += pivot_row;
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        (
            Self {
                cols: self.cols,
                rows,
            },
            pivots,
        )
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.cols
    }

    /// Basis of the right kernel `{x : Ax = 0}`, one vector per free column.
    pub fn kernel(&self) -> Vec<F2Vector> {
        let (reduced, pivots) = self.rref();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut x = F2Vector::unit(self.cols, free);
            for (r, &p) in pivots.iter().enumerate() {
                if reduced.get(r, free) {
                    x.set(p, true);
                }
            }
            basis.push(x);
        }
        basis
    }

    pub fn inverse(&self) -> Option<F2Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.cols;
        let mut a = self.rows.clone();
        let mut inv: Vec<F2Vector> = (0..n).map(|i| F2Vector::unit(n, i)).collect();
        for c in 0..n {
            let p = (c..n).find(|&i| a[i].get(c))?;
            a.swap(c, p);
            inv.swap(c, p);
            for i in 0..n {
                if i != c && a[i].get(c) {
                    let (ar, ir) = (a[c], inv[c]);
                    a[i] += ar;
                    inv[i] += ir;
                }
            }
        }
        Some(Self { cols: n, rows: inv })
    }
}

impl Mul for &F2Matrix {
    type Output = F2Matrix;

    fn mul(self, rhs: &F2Matrix) -> F2Matrix {
        assert_eq!(self.cols, rhs.nrows(), "dimension mismatch");
        let rows = self
            .rows
            .iter()
            .map(|r| {
                r.ones()
                    .fold(F2Vector::zero(rhs.cols), |acc, k| acc + rhs.rows[k])
            })
            .collect();
        F2Matrix {
            cols: rhs.cols,
            rows,
        }
    }
}

impl Add for &F2Matrix {
    type Output = F2Matrix;

    fn add(self, rhs: &F2Matrix) -> F2Matrix {
        assert_eq!(self.cols, rhs.cols);
        assert_eq!(self.nrows(), rhs.nrows());
        F2Matrix {
            cols: self.cols,
            rows: self
                .rows
                .iter()
                .zip(&rhs.rows)
                .map(|(a, b)| *a + *b)
                .collect(),
        }
    }
}

impl fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strictly_lower_triangular_detection() {
        assert!(F2Matrix::from_strs(&["00", "10"]).is_strictly_lower_triangular());
        assert!(!F2Matrix::from_strs(&["01", "00"]).is_strictly_lower_triangular());
        assert!(!F2Matrix::identity(3).is_strictly_lower_triangular());
        assert!(F2Matrix::from_strs(&["000", "100", "110"]).is_strictly_lower_triangular());
        assert!(F2Matrix::zero(0, 0).is_strictly_lower_triangular());
    }

    #[test]
    fn inverse_roundtrip() {
        let m = F2Matrix::from_strs(&["110", "011", "001"]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, F2Matrix::identity(3));
        assert!(F2Matrix::from_strs(&["11", "11"]).inverse().is_none());
    }

    #[test]
    fn kernel_of_nilpotent() {
        let a = F2Matrix::from_strs(&["00", "10"]);
        assert_eq!(a.kernel(), vec![F2Vector::unit(2, 1)]);
    }

    #[test]
    fn columns_and_transpose_agree() {
        let m = F2Matrix::from_strs(&["101", "011"]);
        assert_eq!(m.transpose().row(0), m.column(0));
        assert_eq!(
            F2Matrix::from_columns(&[m.column(0), m.column(1), m.column(2)]),
            m
        );
    }
}
