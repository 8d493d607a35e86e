//! Small dense exact linear algebra over a [`Scalar`] field.

use crate::scalar::Scalar;

/// Row echelon data of a matrix: the reduced rows and their pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon<T> {
    pub rows: Vec<Vec<T>>,
    pub pivots: Vec<usize>,
    pub ncols: usize,
}

impl<T: Scalar> Echelon<T> {
    pub fn empty(ncols: usize) -> Self {
        Echelon {
            rows: Vec::new(),
            pivots: Vec::new(),
            ncols,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the stored rows; the result has zeros in every pivot column.
    pub fn reduce(&self, v: &[T]) -> Vec<T> {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = x.clone() - f.clone() * r.clone();
                }
            }
        }
        v
    }

    /// Adds a vector to the span, keeping the rows fully reduced.
    /// Returns `false` when the vector was already in the span.
    pub fn insert(&mut self, v: &[T]) -> bool {
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = T::one() / v[p].clone();
        for x in v.iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, y) in row.iter_mut().zip(&v) {
                if !y.is_zero() {
                    *x = x.clone() - f.clone() * y.clone();
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    pub fn contains(&self, v: &[T]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }
}

/// Solves the square system `m x = b`; `None` when singular.
pub fn solve<T: Scalar>(m: &[Vec<T>], b: &[T]) -> Option<Vec<T>> {
    let n = m.len();
    let mut a: Vec<Vec<T>> = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        let inv = T::one() / a[col][col].clone();
        for x in a[col].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot_row) {
                    *x = x.clone() - f.clone() * y.clone();
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n].clone()).collect())
}
