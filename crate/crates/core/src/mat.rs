//! Dense square matrices over an exact scalar.
//!
//! Just enough linear algebra for Weyl-group actions: multiply, apply to a
//! coordinate vector, and exact Gauss-Jordan inversion for the base change
//! between fundamental-weight and simple-root coordinates.

use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix<S> {
    n: usize,
    // row-major
    entries: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn identity(n: usize) -> Self {
        let mut entries = vec![S::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = S::one();
        }
        Matrix { n, entries }
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Matrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.entries[i * self.n + j] = v;
    }

    /// `self * other`.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut entries = vec![S::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let t = a.clone() * other.get(k, j).clone();
                    entries[i * n + j] = entries[i * n + j].clone() + t;
                }
            }
        }
        Matrix { n, entries }
    }

    /// `self * v` for a column vector `v`.
    pub fn apply(&self, v: &[S]) -> Vec<S> {
        assert_eq!(v.len(), self.n);
        (0..self.n)
            .map(|i| {
                let mut acc = S::zero();
                for (j, vj) in v.iter().enumerate() {
                    acc = acc + self.get(i, j).clone() * vj.clone();
                }
                acc
            })
            .collect()
    }

    /// Exact inverse; `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.n;
        let mut a = self.clone();
        let mut inv: Matrix<S> = Matrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.get(r, col).is_zero())?;
            if pivot != col {
                for j in 0..n {
                    let (x, y) = (a.get(pivot, j).clone(), a.get(col, j).clone());
                    a.set(pivot, j, y);
                    a.set(col, j, x);
                    let (x, y) = (inv.get(pivot, j).clone(), inv.get(col, j).clone());
                    inv.set(pivot, j, y);
                    inv.set(col, j, x);
                }
            }
            let p = a.get(col, col).clone();
            for j in 0..n {
                a.set(col, j, a.get(col, j).clone() / p.clone());
                inv.set(col, j, inv.get(col, j).clone() / p.clone());
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col).clone();
                for j in 0..n {
                    let t = a.get(r, j).clone() - f.clone() * a.get(col, j).clone();
                    a.set(r, j, t);
                    let t = inv.get(r, j).clone() - f.clone() * inv.get(col, j).clone();
                    inv.set(r, j, t);
                }
            }
        }
        Some(inv)
    }
}
