//! Dense matrices over a [`Field`] descriptor, with exact Gaussian
//! elimination.
//!
//! Row reduction always picks the first nonzero entry in column order as the
//! pivot, so every routine here is deterministic: the same input produces the
//! same reduced form, the same pivot list, and the same kernel basis.

use crate::field::Field;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<K: Field> {
    field: K,
    rows: usize,
    cols: usize,
    entries: Vec<K::Elem>,
}

impl<K: Field> std::fmt::Debug for Matrix<K> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field.name())?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| self.field.format(self.get(i, j)))
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<K: Field> Matrix<K> {
    pub fn zero(field: K, rows: usize, cols: usize) -> Self {
        let entries = vec![field.zero(); rows * cols];
        Matrix { field, rows, cols, entries }
    }

    pub fn identity(field: K, n: usize) -> Self {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            let one = m.field.one();
            m.set(i, i, one);
        }
        m
    }

    pub fn from_rows(field: K, cols: usize, rows: Vec<Vec<K::Elem>>) -> Self {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "row length mismatch");
            entries.extend(r);
        }
        Matrix { field, rows: n, cols, entries }
    }

    pub fn from_fn(field: K, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> K::Elem) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { field, rows, cols, entries }
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &K::Elem {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: K::Elem) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[K::Elem] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| self.field.is_zero(e))
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.field.clone(), self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        Matrix::from_fn(self.field.clone(), self.rows, self.cols, |i, j| {
            self.field.add(self.get(i, j), other.get(i, j))
        })
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        Matrix::from_fn(self.field.clone(), self.rows, self.cols, |i, j| {
            self.field.sub(self.get(i, j), other.get(i, j))
        })
    }

    pub fn scale(&self, c: &K::Elem) -> Self {
        Matrix::from_fn(self.field.clone(), self.rows, self.cols, |i, j| {
            self.field.mul(c, self.get(i, j))
        })
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch in matrix product");
        let k = &self.field;
        Matrix::from_fn(k.clone(), self.rows, other.cols, |i, j| {
            let mut acc = k.zero();
            for t in 0..self.cols {
                let term = k.mul(self.get(i, t), other.get(t, j));
                acc = k.add(&acc, &term);
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[K::Elem]) -> Vec<K::Elem> {
        assert_eq!(self.cols, v.len(), "shape mismatch in matrix-vector product");
        let k = &self.field;
        (0..self.rows)
            .map(|i| {
                let mut acc = k.zero();
                for j in 0..self.cols {
                    acc = k.add(&acc, &k.mul(self.get(i, j), &v[j]));
                }
                acc
            })
            .collect()
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "row count mismatch in hstack");
        Matrix::from_fn(self.field.clone(), self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    /// Vertical concatenation, `self` on top.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "column count mismatch in vstack");
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Matrix {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        }
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let k = self.field.clone();
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0usize;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let Some(r) = (pivot_row..m.rows).find(|&r| !k.is_zero(m.get(r, col))) else {
                continue;
            };
            m.swap_rows(pivot_row, r);
            let inv = k.inv(m.get(pivot_row, col)).expect("pivot is nonzero");
            m.scale_row(pivot_row, &inv);
            for r2 in 0..m.rows {
                if r2 != pivot_row && !k.is_zero(m.get(r2, col)) {
                    let factor = m.get(r2, col).clone();
                    m.row_sub_scaled(r2, pivot_row, &factor);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel `{ x : A·x = 0 }`, one vector per free column,
    /// listed in increasing free-column order.
    pub fn kernel_basis(&self) -> Vec<Vec<K::Elem>> {
        let k = &self.field;
        let (r, pivots) = self.rref();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (row, &col) in pivots.iter().enumerate() {
                v[col] = Some(row);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut x = vec![k.zero(); self.cols];
            x[free] = k.one();
            for (row, &col) in pivots.iter().enumerate() {
                x[col] = k.neg(r.get(row, free));
            }
            basis.push(x);
        }
        basis
    }

    /// One solution of `A·x = b`, or `None` if the system is inconsistent.
    /// Free variables are set to zero.
    pub fn solve(&self, b: &[K::Elem]) -> Option<Vec<K::Elem>> {
        assert_eq!(self.rows, b.len(), "right-hand side length mismatch");
        let k = &self.field;
        let rhs = Matrix::from_fn(k.clone(), self.rows, 1, |i, _| b[i].clone());
        let (r, pivots) = self.hstack(&rhs).rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![k.zero(); self.cols];
        for (row, &col) in pivots.iter().enumerate() {
            x[col] = r.get(row, self.cols).clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols, "only square matrices can be inverted");
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(self.field.clone(), n));
        let (r, pivots) = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
            return None;
        }
        Some(Matrix::from_fn(self.field.clone(), n, n, |i, j| r.get(i, n + j).clone()))
    }

    /// The trace of a square matrix.
    pub fn trace(&self) -> K::Elem {
        assert_eq!(self.rows, self.cols, "trace of a non-square matrix");
        let k = &self.field;
        let mut acc = k.zero();
        for i in 0..self.rows {
            acc = k.add(&acc, self.get(i, i));
        }
        acc
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, r: usize, c: &K::Elem) {
        for j in 0..self.cols {
            let v = self.field.mul(self.get(r, j), c);
            self.set(r, j, v);
        }
    }

    /// row[r] -= c * row[src]
    fn row_sub_scaled(&mut self, r: usize, src: usize, c: &K::Elem) {
        for j in 0..self.cols {
            let delta = self.field.mul(c, self.get(src, j));
            let v = self.field.sub(self.get(r, j), &delta);
            self.set(r, j, v);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn qmat(rows: Vec<Vec<i64>>) -> Matrix<Rationals> {
        let cols = rows[0].len();
        Matrix::from_rows(
            Rationals,
            cols,
            rows.into_iter()
                .map(|r| r.into_iter().map(|v| Rationals.from_int(v)).collect())
                .collect(),
        )
    }

    #[test]
    fn rref_of_rank_one_matrix() {
        let m = qmat(vec![vec![2, 4], vec![1, 2]]);
        let (r, pivots) = m.rref();
        assert_eq!(r, qmat(vec![vec![1, 2], vec![0, 0]]));
        assert_eq!(pivots, vec![0]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_of_sum_functional() {
        let m = qmat(vec![vec![1, 1]]);
        let kernel = m.kernel_basis();
        assert_eq!(kernel.len(), 1);
        assert_eq!(kernel[0], vec![Rationals.from_int(1), Rationals.from_int(-1)]);
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = qmat(vec![vec![1, 2], vec![3, 4]]);
        let b = vec![Rationals.from_int(5), Rationals.from_int(11)];
        let x = m.solve(&b).unwrap();
        assert_eq!(m.mul_vec(&x), b);

        let singular = qmat(vec![vec![1, 2], vec![2, 4]]);
        let b = vec![Rationals.from_int(1), Rationals.from_int(3)];
        assert!(singular.solve(&b).is_none());
    }

    #[test]
    fn inverse_round_trip() {
        let m = qmat(vec![vec![1, 2], vec![3, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(Rationals, 2));
        assert_eq!(inv.mul(&m), Matrix::identity(Rationals, 2));
        assert!(qmat(vec![vec![1, 2], vec![2, 4]]).inverse().is_none());
    }

    #[test]
    fn prime_field_reduction() {
        let k = PrimeField::new(5).unwrap();
        let m = Matrix::from_rows(k, 2, vec![vec![2, 3], vec![4, 1]]);
        let (r, pivots) = m.rref();
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(r, Matrix::identity(k, 2));
    }

    #[test]
    fn rank_plus_nullity_is_cols() {
        let m = qmat(vec![vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(m.rank() + m.kernel_basis().len(), m.cols());
    }
}
