//! Canonical subspaces of Q^n and closure under operator algebras.
//!
//! A subspace is stored as the reduced row-echelon basis of its span, so two
//! subspaces are equal as sets iff they are equal as values.  Vectors live as
//! rows here; the ambient operators act on column vectors, so pushing a
//! subspace through an operator M maps each basis row v to (M v)^T, i.e. we
//! multiply the basis matrix by M^T on the right.

use std::collections::VecDeque;

use num::Zero;

use crate::matrix::Matrix;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subspace {
    ambient: usize,
    /// RREF basis, one row per basis vector.  Zero rows are never stored.
    basis: Matrix,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(0, ambient),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
        }
    }

    pub fn from_spanning(ambient: usize, vectors: &[Vec<Scalar>]) -> Self {
        if vectors.is_empty() {
            return Subspace::zero(ambient);
        }
        assert!(vectors.iter().all(|v| v.len() == ambient));
        let (r, pivots) = Matrix::from_rows(vectors.to_vec()).rref();
        if pivots.is_empty() {
            return Subspace::zero(ambient);
        }
        let rows = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace {
            ambient,
            basis: Matrix::from_rows(rows),
        }
    }

    /// Row space of a matrix, e.g. a kernel basis.
    pub fn from_row_space(m: &Matrix) -> Self {
        Subspace::from_spanning(m.cols(), &m.row_vecs())
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vecs()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn contains_vec(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient);
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        other.basis_rows().iter().all(|v| self.contains_vec(v))
    }

    /// Pivot columns of the RREF basis, one per basis row.
    pub fn pivot_columns(&self) -> Vec<usize> {
        (0..self.basis.rows())
            .map(|row| {
                (0..self.ambient)
                    .find(|&j| !self.basis.at(row, j).is_zero())
                    .expect("no zero rows in basis")
            })
            .collect()
    }

    /// Coordinates of a member vector in the canonical basis: because the
    /// basis is in RREF, they are just the entries at the pivot columns.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains_vec(v) {
            return None;
        }
        Some(self.pivot_columns().iter().map(|&p| v[p].clone()).collect())
    }

    /// Reduce a vector modulo the RREF basis (residual after elimination).
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut w = v.to_vec();
        for row in 0..self.basis.rows() {
            // RREF basis: each row's pivot is its first nonzero entry, = 1.
            let pivot = (0..self.ambient)
                .find(|&j| !self.basis.at(row, j).is_zero())
                .expect("no zero rows in basis");
            if w[pivot].is_zero() {
                continue;
            }
            let f = w[pivot].clone();
            for j in 0..self.ambient {
                let v = &w[j] - &f * self.basis.at(row, j);
                w[j] = v;
            }
        }
        w
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let mut rows = self.basis_rows();
        rows.extend(other.basis_rows());
        Subspace::from_spanning(self.ambient, &rows)
    }

    /// Intersection via the Zassenhaus block trick on [U|U] and [W|0].
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let n = self.ambient;
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for u in self.basis_rows() {
            let mut row = u.clone();
            row.extend(u);
            rows.push(row);
        }
        for w in other.basis_rows() {
            let mut row = w;
            row.extend(vec![Scalar::zero(); n]);
            rows.push(row);
        }
        if rows.is_empty() {
            return Subspace::zero(n);
        }
        let (r, pivots) = Matrix::from_rows(rows).rref();
        // Rows whose pivot lies in the right block span the intersection
        // (read off from the right block).
        let inter: Vec<Vec<Scalar>> = pivots
            .iter()
            .enumerate()
            .filter(|(_, &p)| p >= n)
            .map(|(i, _)| r.row(i)[n..].to_vec())
            .collect();
        Subspace::from_spanning(n, &inter)
    }

    /// Image of the subspace under the column-action of M.
    pub fn apply(&self, m: &Matrix) -> Subspace {
        let rows: Vec<Vec<Scalar>> = self.basis_rows().iter().map(|v| m.mul_vec(v)).collect();
        Subspace::from_spanning(m.rows(), &rows)
    }

    /// Is the subspace invariant under M (column action)?
    pub fn is_invariant_under(&self, m: &Matrix) -> bool {
        self.basis_rows()
            .iter()
            .all(|v| self.contains_vec(&m.mul_vec(v)))
    }
}

/// Smallest subspace containing `seeds` and invariant under all of `ops`
/// (breadth-first closure; terminates since dimension is bounded).
pub fn spin(ambient: usize, seeds: &[Vec<Scalar>], ops: &[&Matrix]) -> Subspace {
    let mut space = Subspace::from_spanning(ambient, seeds);
    let mut queue: VecDeque<Vec<Scalar>> = space.basis_rows().into();
    while let Some(v) = queue.pop_front() {
        for op in ops {
            let w = op.mul_vec(&v);
            if !space.contains_vec(&w) {
                let mut rows = space.basis_rows();
                rows.push(w.clone());
                space = Subspace::from_spanning(ambient, &rows);
                queue.push_back(w);
            }
        }
    }
    space
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn v(entries: &[i64]) -> Vec<Scalar> {
        entries.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn canonical_equality() {
        let a = Subspace::from_spanning(3, &[v(&[1, 1, 0]), v(&[0, 2, 0])]);
        let b = Subspace::from_spanning(3, &[v(&[1, 0, 0]), v(&[3, 1, 0])]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn membership_and_containment() {
        let s = Subspace::from_spanning(3, &[v(&[1, 0, 1]), v(&[0, 1, 1])]);
        assert!(s.contains_vec(&v(&[1, 1, 2])));
        assert!(!s.contains_vec(&v(&[0, 0, 1])));
        assert!(Subspace::full(3).contains(&s));
        assert!(s.contains(&Subspace::zero(3)));
    }

    #[test]
    fn sum_and_intersection() {
        let a = Subspace::from_spanning(3, &[v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let b = Subspace::from_spanning(3, &[v(&[0, 1, 0]), v(&[0, 0, 1])]);
        assert!(a.sum(&b).is_full());
        let i = a.intersect(&b);
        assert_eq!(i, Subspace::from_spanning(3, &[v(&[0, 1, 0])]));
        // dim(A) + dim(B) = dim(A+B) + dim(A∩B)
        assert_eq!(a.dim() + b.dim(), a.sum(&b).dim() + i.dim());
    }

    #[test]
    fn spin_closes_under_operators() {
        // Nilpotent shift: spinning the last basis vector recovers everything.
        let shift = Matrix::from_rows(vec![v(&[0, 1, 0]), v(&[0, 0, 1]), v(&[0, 0, 0])]);
        let closed = spin(3, &[v(&[0, 0, 1])], &[&shift]);
        assert!(closed.is_full());
        assert!(closed.is_invariant_under(&shift));

        let small = spin(3, &[v(&[1, 0, 0])], &[&shift]);
        assert_eq!(small.dim(), 1);
    }
}
