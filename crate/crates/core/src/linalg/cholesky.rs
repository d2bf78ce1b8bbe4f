use super::SymmetricMatrix;
use crate::{Error, Result, Scalar};

/// Lower Cholesky factor `L` with `M = L Lᵀ`.
#[derive(Debug, Clone)]
pub struct Cholesky<T> {
    dim: usize,
    // row-major lower triangle, full storage
    lower: Vec<T>,
}

impl<T: Scalar> Cholesky<T> {
    /// Factors `m`, failing on a non-positive pivot.
    pub fn factor(m: &SymmetricMatrix<T>) -> Result<Self> {
        let n = m.dim();
        let mut lower = vec![T::zero(); n * n];
        for j in 0..n {
            let mut d = m.get(j, j);
            for k in 0..j {
                d = d - lower[j * n + k] * lower[j * n + k];
            }
            if !(d > T::zero()) {
                return Err(Error::SingularPredictors { eigenvalue: d.as_f64() });
            }
            let d = d.sqrt();
            lower[j * n + j] = d;
            for i in (j + 1)..n {
                let mut s = m.get(i, j);
                for k in 0..j {
                    s = s - lower[i * n + k] * lower[j * n + k];
                }
                lower[i * n + j] = s / d;
            }
        }
        Ok(Self { dim: n, lower })
    }

    pub fn solve(&self, b: &[T]) -> Vec<T> {
        let n = self.dim;
        assert_eq!(b.len(), n, "right-hand side length");
        let l = &self.lower;
        let mut y = b.to_vec();
        for i in 0..n {
            for k in 0..i {
                y[i] = y[i] - l[i * n + k] * y[k];
            }
            y[i] = y[i] / l[i * n + i];
        }
        for i in (0..n).rev() {
            for k in (i + 1)..n {
                y[i] = y[i] - l[k * n + i] * y[k];
            }
            y[i] = y[i] / l[i * n + i];
        }
        y
    }

    pub fn inverse(&self) -> SymmetricMatrix<T> {
        let n = self.dim;
        let cols: Vec<Vec<T>> = (0..n)
            .map(|j| {
                let e: Vec<T> = (0..n).map(|i| if i == j { T::one() } else { T::zero() }).collect();
                self.solve(&e)
            })
            .collect();
        let half = T::of(0.5);
        SymmetricMatrix::from_lower_fn(n, |i, j| (cols[j][i] + cols[i][j]) * half)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solves_small_system() {
        let m = SymmetricMatrix::from_rows(&[vec![4.0f64, 2.0], vec![2.0, 3.0]]).unwrap();
        let c = Cholesky::factor(&m).unwrap();
        let x = c.solve(&[2.0, 1.0]);
        assert!((4.0 * x[0] + 2.0 * x[1] - 2.0).abs() < 1e-14);
        assert!((2.0 * x[0] + 3.0 * x[1] - 1.0).abs() < 1e-14);
        let inv = c.inverse();
        assert!((inv.get(0, 0) - 3.0 / 8.0).abs() < 1e-15);
        assert!((inv.get(0, 1) + 2.0 / 8.0).abs() < 1e-15);
    }

    #[test]
    fn rejects_indefinite() {
        let m = SymmetricMatrix::from_rows(&[vec![1.0, 2.0], vec![2.0, 1.0]]).unwrap();
        assert!(matches!(Cholesky::factor(&m), Err(Error::SingularPredictors { .. })));
    }
}
