//! Dense linear algebra over `F_p`: ranks, reduced row echelon forms, kernels.

use alloc::vec;
use alloc::vec::Vec;

use crate::field::{FieldElement, PrimeField};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<u32>>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![vec![0; cols]; rows] }
    }

    /// Builds from row vectors; all rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<FieldElement>>) -> Self {
        let data: Vec<Vec<u32>> = rows
            .into_iter()
            .map(|r| {
                assert_eq!(r.len(), cols, "ragged matrix");
                r.into_iter().map(FieldElement::value).collect()
            })
            .collect();
        Matrix { rows: data.len(), cols, data }
    }

    /// Builds from column vectors of length `rows`.
    pub fn from_columns(rows: usize, cols: &[Vec<FieldElement>]) -> Self {
        let mut m = Matrix::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows, "ragged matrix");
            for (i, v) in c.iter().enumerate() {
                m.data[i][j] = v.value();
            }
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        FieldElement::from_raw(self.data[i][j])
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: FieldElement) {
        self.data[i][j] = v.value();
    }

    /// `self[i][j] += v`.
    pub fn add_to(&mut self, field: &PrimeField, i: usize, j: usize, v: FieldElement) {
        let cur = FieldElement::from_raw(self.data[i][j]);
        self.data[i][j] = field.add(cur, v).value();
    }

    pub fn row(&self, i: usize) -> Vec<FieldElement> {
        self.data[i].iter().map(|&v| FieldElement::from_raw(v)).collect()
    }

    pub fn column(&self, j: usize) -> Vec<FieldElement> {
        self.data.iter().map(|r| FieldElement::from_raw(r[j])).collect()
    }

    pub fn push_row(&mut self, row: Vec<FieldElement>) {
        assert_eq!(row.len(), self.cols);
        self.data.push(row.into_iter().map(FieldElement::value).collect());
        self.rows += 1;
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j][i] = self.data[i][j];
            }
        }
        t
    }

    pub fn mul(&self, field: &PrimeField, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let p = field.modulus() as u64;
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.data[i][k] as u64;
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.data[k][j] as u64;
                    if b != 0 {
                        out.data[i][j] = ((out.data[i][j] as u64 + a * b) % p) as u32;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, field: &PrimeField, v: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(v.len(), self.cols);
        let p = field.modulus() as u64;
        self.data
            .iter()
            .map(|r| {
                let s = r.iter().zip(v).fold(0u64, |acc, (&a, b)| (acc + a as u64 * b.value() as u64) % p);
                FieldElement::from_raw(s as u32)
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.iter().all(|&v| v == 0))
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref_in_place(&mut self, field: &PrimeField) -> Vec<usize> {
        let p = field.modulus() as u64;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(src) = (r..self.rows).find(|&i| self.data[i][c] != 0) else {
                continue;
            };
            self.data.swap(r, src);
            let inv =
                field.inv(FieldElement::from_raw(self.data[r][c])).expect("pivot is nonzero").value() as u64;
            let support: Vec<usize> = (c..self.cols).filter(|&j| self.data[r][j] != 0).collect();
            for &j in &support {
                self.data[r][j] = (self.data[r][j] as u64 * inv % p) as u32;
            }
            let pivot_row = core::mem::take(&mut self.data[r]);
            for (i, row) in self.data.iter_mut().enumerate() {
                if i == r {
                    continue;
                }
                let f = row[c] as u64;
                if f == 0 {
                    continue;
                }
                let neg = p - f;
                for &j in &support {
                    row[j] = ((row[j] as u64 + neg * pivot_row[j] as u64) % p) as u32;
                }
            }
            self.data[r] = pivot_row;
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rref(&self, field: &PrimeField) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let piv = m.rref_in_place(field);
        (m, piv)
    }

    pub fn rank(&self, field: &PrimeField) -> usize {
        self.rref(field).1.len()
    }

    /// Basis of `{x : self * x = 0}`, one vector per free column.
    pub fn kernel(&self, field: &PrimeField) -> Vec<Vec<FieldElement>> {
        let (r, pivots) = self.rref(field);
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![FieldElement::ZERO; self.cols];
            v[free] = FieldElement::ONE;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = field.neg(FieldElement::from_raw(r.data[i][free]));
            }
            basis.push(v);
        }
        basis
    }

    /// Some `x` with `self * x = b`, if one exists.
    pub fn solve(&self, field: &PrimeField, b: &[FieldElement]) -> Option<Vec<FieldElement>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for ((row, src), bi) in aug.data.iter_mut().zip(&self.data).zip(b) {
            row[..self.cols].copy_from_slice(src);
            row[self.cols] = bi.value();
        }
        let pivots = aug.rref_in_place(field);
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![FieldElement::ZERO; self.cols];
        for (i, &pc) in pivots.iter().enumerate() {
            x[pc] = FieldElement::from_raw(aug.data[i][self.cols]);
        }
        Some(x)
    }
}

/// Rank of a family of vectors of common length `dim`.
pub fn rank_of(field: &PrimeField, dim: usize, vectors: &[Vec<FieldElement>]) -> usize {
    if vectors.is_empty() || dim == 0 {
        return 0;
    }
    Matrix::from_rows(dim, vectors.to_vec()).rank(field)
}
