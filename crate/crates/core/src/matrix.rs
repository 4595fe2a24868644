//! Exact dense matrices over a [`Field`] with deterministic elimination.
//!
//! The pivot rule is fixed: columns are scanned left to right and, within a
//! column, rows top to bottom; the first nonzero entry wins. Every downstream
//! certificate (solution matrices, nullspace bases) is therefore reproducible
//! bit for bit across runs.

use crate::field::Field;
use std::fmt;

#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<F: Field> {
    rows: usize,
    cols: usize,
    entries: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn new(rows: usize, cols: usize, entries: Vec<F>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count mismatch");
        assert!(!entries.is_empty(), "empty matrices are not supported");
        Matrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix::new(rows, cols, entries)
    }

    pub fn identity(n: usize, witness: &F) -> Self {
        Matrix::from_fn(n, n, |i, j| {
            if i == j {
                witness.one()
            } else {
                witness.zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &F {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.entries[i * self.cols + j] = v;
    }

    fn witness(&self) -> &F {
        &self.entries[0]
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in mul");
        Matrix::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = self.witness().zero();
            for k in 0..self.cols {
                acc = acc.add(&self.at(i, k).mul(rhs.at(k, j)));
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = self.witness().zero();
                for k in 0..self.cols {
                    acc = acc.add(&self.at(i, k).mul(&v[k]));
                }
                acc
            })
            .collect()
    }

    pub fn hstack(&self, rhs: &Self) -> Self {
        assert_eq!(self.rows, rhs.rows);
        Matrix::from_fn(self.rows, self.cols + rhs.cols, |i, j| {
            if j < self.cols {
                self.at(i, j).clone()
            } else {
                rhs.at(i, j - self.cols).clone()
            }
        })
    }

    /// Reduced row echelon form; returns (rref, pivot column indices).
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let pivot_row = match (row..m.rows).find(|&r| !m.at(r, col).is_zero()) {
                Some(r) => r,
                None => continue,
            };
            if pivot_row != row {
                for j in 0..m.cols {
                    let a = m.at(row, j).clone();
                    let b = m.at(pivot_row, j).clone();
                    m.set(row, j, b);
                    m.set(pivot_row, j, a);
                }
            }
            let inv = m.at(row, col).inv();
            for j in col..m.cols {
                let v = m.at(row, j).mul(&inv);
                m.set(row, j, v);
            }
            for r in 0..m.rows {
                if r == row || m.at(r, col).is_zero() {
                    continue;
                }
                let factor = m.at(r, col).clone();
                for j in col..m.cols {
                    let v = m.at(r, j).sub(&factor.mul(m.at(row, j)));
                    m.set(r, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Exact basis of the right kernel; empty iff full column rank. The
    /// basis vectors are the standard rref kernel vectors, one per free
    /// column in ascending order.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let (r, pivots) = self.rref();
        let zero = self.witness().zero();
        let one = self.witness().one();
        let mut basis = Vec::new();
        let mut is_pivot_col = vec![false; self.cols];
        for &col in &pivots {
            is_pivot_col[col] = true;
        }
        for free in 0..self.cols {
            if is_pivot_col[free] {
                continue;
            }
            let mut v = vec![zero.clone(); self.cols];
            v[free] = one.clone();
            for (rowi, &pcol) in pivots.iter().enumerate() {
                v[pcol] = r.at(rowi, free).neg();
            }
            basis.push(v);
        }
        basis
    }

    /// One exact solution X of self * X = B (deterministic: free variables
    /// are set to zero). Errors if the system is inconsistent.
    pub fn solve(&self, b: &Matrix<F>) -> Result<Matrix<F>, String> {
        assert_eq!(self.rows, b.rows, "dimension mismatch in solve");
        let aug = self.hstack(b);
        let (r, pivots) = aug.rref();
        // a pivot in the right block means a row 0 = 1 after elimination
        if pivots.iter().any(|&pcol| pcol >= self.cols) {
            return Err("no solution: inconsistent linear system".into());
        }
        let zero = self.witness().zero();
        let mut x = Matrix::from_fn(self.cols, b.cols, |_, _| zero.clone());
        for (rowi, &pcol) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(pcol, j, r.at(rowi, self.cols + j).clone());
            }
        }
        Ok(x)
    }
}

impl<F: Field> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use crate::field::Rat;
    use super::*;
    use crate::field::big;
    
    fn m(rows: usize, cols: usize, vals: &[i64]) -> Matrix<Rat> {
        Matrix::new(rows, cols, vals.iter().map(|&v| big(v)).collect())
    }

    #[test]
    fn nullspace_of_identity_is_empty() {
        let id = Matrix::identity(3, &big(0));
        assert!(id.nullspace().is_empty());
        assert_eq!(id.rank(), 3);
    }

    #[test]
    fn nullspace_of_rank_one() {
        let a = m(2, 2, &[1, 1, 2, 2]);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 1);
        // spans the line through (1, -1)
        let v = &ns[0];
        assert_eq!(v[0].clone() + v[1].clone(), big(0));
        assert!(!v[1].is_zero());
    }

    #[test]
    fn solve_identity_and_inconsistent() {
        let id = Matrix::identity(2, &big(0));
        let b = m(2, 1, &[7, -3]);
        assert_eq!(id.solve(&b).unwrap(), b);
        let a = m(2, 1, &[1, 1]);
        let bad = m(2, 1, &[0, 1]);
        assert!(a.solve(&bad).is_err());
    }

    #[test]
    fn rank_nullity() {
        let a = m(3, 4, &[1, 2, 3, 4, 2, 4, 6, 8, 0, 1, 1, 0]);
        assert_eq!(a.rank() + a.nullspace().len(), a.cols());
        for v in a.nullspace() {
            for x in a.mul_vec(&v) {
                assert!(x.is_zero());
            }
        }
    }

    #[test]
    fn solve_is_deterministic_particular_solution() {
        // underdetermined: free variables pinned to zero
        let a = m(2, 3, &[1, 0, 1, 0, 1, 1]);
        let b = m(2, 1, &[3, 5]);
        let x = a.solve(&b).unwrap();
        assert_eq!(x, m(3, 1, &[3, 5, 0]));
        assert_eq!(a.mul(&x), b);
    }
}
