//! Subspaces of `K^n` in canonical form.
//!
//! A subspace is stored as the reduced row echelon form of any spanning set,
//! so two subspaces are equal as values exactly when they are equal as sets of
//! vectors.

use crate::field::Field;
use crate::matrix::Matrix;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace<K: Field> {
    field: K,
    ambient: usize,
    /// RREF rows, all nonzero.
    rows: Vec<Vec<K::Elem>>,
    pivots: Vec<usize>,
}

impl<K: Field> Subspace<K> {
    pub fn zero(field: K, ambient: usize) -> Self {
        Subspace { field, ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: K, ambient: usize) -> Self {
        let id = Matrix::identity(field.clone(), ambient);
        let rows = (0..ambient).map(|i| id.row(i).to_vec()).collect();
        Subspace { field, ambient, rows, pivots: (0..ambient).collect() }
    }

    pub fn from_vectors(field: K, ambient: usize, vectors: &[Vec<K::Elem>]) -> Self {
        if vectors.is_empty() {
            return Subspace::zero(field, ambient);
        }
        let m = Matrix::from_rows(field.clone(), ambient, vectors.to_vec());
        let (r, pivots) = m.rref();
        let rows = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace { field, ambient, rows, pivots }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<K::Elem>] {
        &self.rows
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// The normal form of `v` modulo this subspace: subtract the unique
    /// combination of basis rows matching `v` on the pivot coordinates.
    pub fn reduce(&self, v: &[K::Elem]) -> Vec<K::Elem> {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let k = &self.field;
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if k.is_zero(&v[p]) {
                continue;
            }
            let c = v[p].clone();
            for j in 0..self.ambient {
                let delta = k.mul(&c, &row[j]);
                v[j] = k.sub(&v[j], &delta);
            }
        }
        v
    }

    pub fn contains(&self, v: &[K::Elem]) -> bool {
        self.reduce(v).iter().all(|e| self.field.is_zero(e))
    }

    pub fn contains_subspace(&self, other: &Self) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    /// Span of the union.
    pub fn sum(&self, other: &Self) -> Self {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        let mut vectors = self.rows.clone();
        vectors.extend(other.rows.iter().cloned());
        Subspace::from_vectors(self.field.clone(), self.ambient, &vectors)
    }

    pub fn intersect(&self, other: &Self) -> Self {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        let k = &self.field;
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(k.clone(), self.ambient);
        }
        // x lies in both spans iff x = U^T a = V^T b for some a, b; the kernel
        // of [U^T | -V^T] enumerates all such pairs.
        let ut = Matrix::from_rows(k.clone(), self.ambient, self.rows.clone()).transpose();
        let vt = Matrix::from_rows(k.clone(), self.ambient, other.rows.clone()).transpose();
        let neg_one = k.neg(&k.one());
        let stacked = ut.hstack(&vt.scale(&neg_one));
        let r = self.dim();
        let vectors: Vec<Vec<K::Elem>> = stacked
            .kernel_basis()
            .into_iter()
            .map(|ab| {
                let a = &ab[..r];
                (0..self.ambient)
                    .map(|j| {
                        let mut acc = k.zero();
                        for (i, ai) in a.iter().enumerate() {
                            acc = k.add(&acc, &k.mul(ai, &self.rows[i][j]));
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        Subspace::from_vectors(k.clone(), self.ambient, &vectors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    fn qvec(v: Vec<i64>) -> Vec<<Rationals as Field>::Elem> {
        v.into_iter().map(|x| Rationals.from_int(x)).collect()
    }

    fn span(vs: Vec<Vec<i64>>) -> Subspace<Rationals> {
        let ambient = vs[0].len();
        let vectors: Vec<_> = vs.into_iter().map(qvec).collect();
        Subspace::from_vectors(Rationals, ambient, &vectors)
    }

    #[test]
    fn canonical_form_identifies_equal_spans() {
        let a = span(vec![vec![1, 1, 0], vec![0, 0, 1]]);
        let b = span(vec![vec![1, 1, 1], vec![2, 2, 1]]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn membership_and_reduction() {
        let s = span(vec![vec![1, 0, 2], vec![0, 1, 3]]);
        assert!(s.contains(&qvec(vec![2, -1, 1])));
        assert!(!s.contains(&qvec(vec![0, 0, 1])));
        assert_eq!(s.reduce(&qvec(vec![1, 1, 5])), qvec(vec![0, 0, 0]));
    }

    #[test]
    fn sum_and_intersection_dimensions() {
        // Two planes in Q^3 meeting in a line.
        let a = span(vec![vec![1, 0, 0], vec![0, 1, 0]]);
        let b = span(vec![vec![0, 1, 0], vec![0, 0, 1]]);
        let s = a.sum(&b);
        let i = a.intersect(&b);
        assert_eq!(s.dim(), 3);
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&qvec(vec![0, 1, 0])));
        assert_eq!(a.dim() + b.dim(), s.dim() + i.dim());
    }

    #[test]
    fn zero_and_full() {
        let z = Subspace::zero(Rationals, 4);
        let f = Subspace::full(Rationals, 4);
        assert_eq!(z.dim(), 0);
        assert_eq!(f.dim(), 4);
        assert!(f.contains_subspace(&z));
        assert_eq!(f.intersect(&z).dim(), 0);
    }
}
