use crate::data::CorrelationMatrix;
use crate::linalg::{eigen_decompose, EigenSystem, Matrix};
use crate::{Error, Result, Scalar};

/// Variance-decomposition proportions. Row `j` belongs to eigenvalue λ_j,
/// column `i` to variable X_i, so `proportions[(j, i)] = π_ji`.
#[derive(Debug, Clone, PartialEq)]
pub struct VdpTable<T> {
    pub proportions: Matrix<T>,
    pub eigenvalues: Vec<T>,
    pub condition_indices: Vec<T>,
}

impl<T: Scalar> VdpTable<T> {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn row(&self, j: usize) -> &[T] {
        self.proportions.row(j)
    }
}

pub fn vdp<T: Scalar>(r: &CorrelationMatrix<T>, min_eigenvalue: T) -> Result<VdpTable<T>> {
    let eigen = eigen_decompose(r.matrix())?;
    vdp_from_eigen(&eigen, min_eigenvalue)
}

/// `π_ji = (v_ij² / λ_j) / VIF_i` with `VIF_i = Σ_j v_ij² / λ_j`.
pub fn vdp_from_eigen<T: Scalar>(eigen: &EigenSystem<T>, min_eigenvalue: T) -> Result<VdpTable<T>> {
    if eigen.smallest() <= min_eigenvalue {
        return Err(Error::ExactCollinearity {
            eigenvalue: eigen.smallest().as_f64(),
            involved: eigen.involved_below(min_eigenvalue),
        });
    }
    let m = eigen.dim();
    let v = eigen.eigenvectors();
    let lambda = eigen.eigenvalues();
    let parts = Matrix::from_fn(m, m, |j, i| v.get(i, j) * v.get(i, j) / lambda[j]);
    let vifs: Vec<T> = (0..m).map(|i| (0..m).map(|j| parts.get(j, i)).sum()).collect();
    let proportions = Matrix::from_fn(m, m, |j, i| parts.get(j, i) / vifs[i]);
    Ok(VdpTable {
        proportions,
        eigenvalues: lambda.to_vec(),
        condition_indices: eigen.condition_indices(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::DEFAULT_MIN_EIGENVALUE as MIN;

    #[test]
    fn identity_attributes_each_variable_to_its_own_direction() {
        let t = vdp(&CorrelationMatrix::<f64>::identity(3), MIN).unwrap();
        assert_eq!(t.proportions, Matrix::identity(3));
        assert_eq!(t.condition_indices, vec![1.0; 3]);
    }

    #[test]
    fn columns_sum_to_one() {
        let r = CorrelationMatrix::from_rows(&[
            vec![1.0, 0.9, 0.2],
            vec![0.9, 1.0, 0.1],
            vec![0.2, 0.1, 1.0],
        ])
        .unwrap();
        let t = vdp(&r, MIN).unwrap();
        for i in 0..3 {
            let s: f64 = (0..3).map(|j| t.proportions.get(j, i)).sum();
            assert!((s - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn singular_rejected() {
        let r = CorrelationMatrix::from_rows(&[vec![1.0, 1.0], vec![1.0, 1.0]]).unwrap();
        assert!(matches!(vdp(&r, MIN), Err(Error::ExactCollinearity { .. })));
    }
}
