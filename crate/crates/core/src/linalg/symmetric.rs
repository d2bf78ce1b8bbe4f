use std::ops::Index;

use super::Matrix;
use crate::{Error, Result, Scalar};

/// Dense symmetric matrix stored as its packed lower triangle, so the
/// (i, j) and (j, i) entries are the same storage cell.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix<T> {
    dim: usize,
    packed: Vec<T>,
}

#[inline]
fn packed_index(i: usize, j: usize) -> usize {
    let (hi, lo) = if i >= j { (i, j) } else { (j, i) };
    hi * (hi + 1) / 2 + lo
}

impl<T: Scalar> SymmetricMatrix<T> {
    /// Builds the matrix from `f(i, j)` evaluated on the lower triangle (`i >= j`).
    ///
    /// Panics if `dim` is zero.
    pub fn from_lower_fn(dim: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        assert!(dim >= 1, "symmetric matrix needs dim >= 1");
        let mut packed = Vec::with_capacity(dim * (dim + 1) / 2);
        for i in 0..dim {
            for j in 0..=i {
                packed.push(f(i, j));
            }
        }
        Self { dim, packed }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_lower_fn(dim, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn from_diagonal(diag: &[T]) -> Self {
        Self::from_lower_fn(diag.len(), |i, j| if i == j { diag[i] } else { T::zero() })
    }

    /// Accepts square rows only when they are exactly symmetric.
    pub fn from_rows(rows: &[Vec<T>]) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::DimensionMismatch("empty matrix".into()));
        }
        if let Some(bad) = rows.iter().position(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch(format!(
                "row {} has {} entries, expected {dim}",
                bad + 1,
                rows[bad].len()
            )));
        }
        for i in 0..dim {
            for j in 0..i {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::Asymmetry {
                        row: i,
                        column: j,
                        difference: (rows[i][j] - rows[j][i]).abs().as_f64(),
                    });
                }
            }
        }
        Ok(Self::from_lower_fn(dim, |i, j| rows[i][j]))
    }

    /// Symmetric part `(M + Mᵀ)/2` of a square dense matrix.
    pub fn symmetrize(m: &Matrix<T>) -> Self {
        assert_eq!(m.rows(), m.cols(), "matrix must be square");
        let half = T::of(0.5);
        Self::from_lower_fn(m.rows(), |i, j| (m.get(i, j) + m.get(j, i)) * half)
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> T {
        self.packed[packed_index(i, j)]
    }

    pub fn diagonal(&self) -> Vec<T> {
        (0..self.dim).map(|i| self.get(i, i)).collect()
    }

    pub fn row(&self, i: usize) -> Vec<T> {
        (0..self.dim).map(|j| self.get(i, j)).collect()
    }

    pub fn to_dense(&self) -> Matrix<T> {
        Matrix::from_fn(self.dim, self.dim, |i, j| self.get(i, j))
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.dim).map(|i| self.row(i)).collect()
    }

    /// Principal submatrix over `indices`, in the given order.
    pub fn submatrix(&self, indices: &[usize]) -> Self {
        Self::from_lower_fn(indices.len(), |i, j| self.get(indices[i], indices[j]))
    }

    pub fn frobenius_norm(&self) -> T {
        let mut sum = T::zero();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let v = self.get(i, j);
                sum = sum + v * v;
            }
        }
        sum.sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.packed.iter().all(|v| v.is_finite())
    }

    pub fn matmul(&self, rhs: &Matrix<T>) -> Matrix<T> {
        &self.to_dense() * rhs
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        if self.dim != other.dim {
            return T::infinity();
        }
        self.packed
            .iter()
            .zip(&other.packed)
            .fold(T::zero(), |acc, (&a, &b)| acc.max((a - b).abs()))
    }
}

impl<T> Index<(usize, usize)> for SymmetricMatrix<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.packed[packed_index(i, j)]
    }
}
