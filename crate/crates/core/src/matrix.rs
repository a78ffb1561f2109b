//! Dense integer matrices for exact incidence algebra, and the real
//! symmetric matrices handed to the eigensolver.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use thiserror::Error;

/// Row-major dense integer matrix. Used for incidence matrices (`n x m`),
/// adjacency and Laplacian matrices, where every identity must hold exactly.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(order: usize) -> Self {
        let mut m = Self::zeros(order, order);
        for i in 0..order {
            m.set(i, i, 1);
        }
        m
    }

    /// Diagonal matrix with the given entries.
    pub fn diagonal(entries: &[i64]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, &x) in entries.iter().enumerate() {
            m.set(i, i, x);
        }
        m
    }

    pub fn from_rows(rows: usize, cols: usize, data: Vec<i64>) -> Self {
        assert_eq!(data.len(), rows * cols, "data length does not match shape");
        IntMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[i64] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: i64) {
        self.data[i * self.cols + j] = x;
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn scaled(&self, k: i64) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * k).collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn row_sums(&self) -> Vec<i64> {
        self.data.chunks(self.cols.max(1)).take(self.rows).map(|r| r.iter().sum()).collect()
    }

    /// Assembles `[[a, b], [c, d]]` from four blocks with matching shapes.
    pub fn block(a: &IntMatrix, b: &IntMatrix, c: &IntMatrix, d: &IntMatrix) -> IntMatrix {
        assert_eq!(a.rows, b.rows);
        assert_eq!(c.rows, d.rows);
        assert_eq!(a.cols, c.cols);
        assert_eq!(b.cols, d.cols);
        let rows = a.rows + c.rows;
        let cols = a.cols + b.cols;
        let mut out = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                let x = match (i < a.rows, j < a.cols) {
                    (true, true) => a.get(i, j),
                    (true, false) => b.get(i, j - a.cols),
                    (false, true) => c.get(i - a.rows, j),
                    (false, false) => d.get(i - a.rows, j - a.cols),
                };
                out.set(i, j, x);
            }
        }
        out
    }

    pub fn to_sym(&self) -> Result<SymMatrix, MatrixError> {
        SymMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) as f64)
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| format!("{:3}", self.get(i, j))).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in product");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    out.data[i * rhs.cols + j] += a * rhs.get(k, j);
                }
            }
        }
        out
    }
}

impl Add for &IntMatrix {
    type Output = IntMatrix;

    fn add(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in sum");
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &IntMatrix {
    type Output = IntMatrix;

    fn sub(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in difference");
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MatrixError {
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not symmetric at ({i}, {j}): {a} vs {b}")]
    NotSymmetric { i: usize, j: usize, a: f64, b: f64 },
}

/// Dense real symmetric matrix, row-major, symmetry checked exactly on entry.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix {
    order: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn from_fn<F>(rows: usize, cols: usize, mut f: F) -> Result<Self, MatrixError>
    where
        F: FnMut(usize, usize) -> f64,
    {
        if rows != cols {
            return Err(MatrixError::NotSquare { rows, cols });
        }
        let mut data = Vec::with_capacity(rows * rows);
        for i in 0..rows {
            for j in 0..rows {
                data.push(f(i, j));
            }
        }
        let m = SymMatrix { order: rows, data };
        m.check_symmetric()?;
        Ok(m)
    }

    pub fn from_row_major(order: usize, data: Vec<f64>) -> Result<Self, MatrixError> {
        if data.len() != order * order {
            return Err(MatrixError::NotSquare { rows: order, cols: data.len() / order.max(1) });
        }
        let m = SymMatrix { order, data };
        m.check_symmetric()?;
        Ok(m)
    }

    pub fn identity(order: usize) -> Self {
        let mut data = vec![0.0; order * order];
        for i in 0..order {
            data[i * order + i] = 1.0;
        }
        SymMatrix { order, data }
    }

    fn check_symmetric(&self) -> Result<(), MatrixError> {
        for i in 0..self.order {
            for j in 0..i {
                let (a, b) = (self.get(i, j), self.get(j, i));
                if a != b {
                    return Err(MatrixError::NotSymmetric { i, j, a, b });
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.order + j]
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn trace(&self) -> f64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_and_transpose() {
        let b = IntMatrix::from_rows(2, 3, vec![1, 0, -1, 1, 1, 0]);
        let bbt = &b * &b.transpose();
        assert_eq!(bbt.data(), &[2, 1, 1, 2]);
        let btb = &b.transpose() * &b;
        assert_eq!(btb.rows(), 3);
        assert!(btb.is_symmetric());
        assert_eq!(btb.get(0, 0), 2);
        assert_eq!(btb.get(0, 2), -1);
    }

    #[test]
    fn blocks() {
        let a = IntMatrix::identity(1);
        let b = IntMatrix::from_rows(1, 2, vec![2, 3]);
        let d = IntMatrix::identity(2).scaled(5);
        let m = IntMatrix::block(&a, &b, &b.transpose(), &d);
        assert_eq!(m.data(), &[1, 2, 3, 2, 5, 0, 3, 0, 5]);
    }

    #[test]
    fn rejects_asymmetric() {
        let err = SymMatrix::from_row_major(2, vec![0.0, 1.0, 2.0, 0.0]).unwrap_err();
        assert!(matches!(err, MatrixError::NotSymmetric { i: 1, j: 0, .. }));
        assert!(matches!(
            IntMatrix::zeros(2, 3).to_sym(),
            Err(MatrixError::NotSquare { rows: 2, cols: 3 })
        ));
    }
}
