use crate::data::{CorrelationMatrix, StandardizedData};
use crate::linalg::{inverse_sqrt_psd, Matrix, SymmetricMatrix};
use crate::{Error, Result, Scalar};

/// The transformation `A = (XᵀX)^{-1/2}`, whose column `a_i` maps the data
/// to the surrogate `u_i = X a_i`, together with the VIFs `a_iᵀ a_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct CosMaxTransform<T> {
    a: SymmetricMatrix<T>,
    vifs: Vec<T>,
    names: Vec<String>,
}

impl<T: Scalar> CosMaxTransform<T> {
    pub fn matrix(&self) -> &SymmetricMatrix<T> {
        &self.a
    }

    pub fn vifs(&self) -> &[T] {
        &self.vifs
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn dim(&self) -> usize {
        self.a.dim()
    }

    /// Column `a_i`; equal to row `i` as A is symmetric.
    pub fn column(&self, i: usize) -> Vec<T> {
        self.a.row(i)
    }
}

pub fn cosmax<T: Scalar>(r: &CorrelationMatrix<T>, min_eigenvalue: T) -> Result<CosMaxTransform<T>> {
    let a = inverse_sqrt_psd(r.matrix(), min_eigenvalue)?;
    let vifs = (0..a.dim())
        .map(|i| (0..a.dim()).map(|j| a.get(j, i) * a.get(j, i)).sum())
        .collect();
    Ok(CosMaxTransform {
        a,
        vifs,
        names: r.names().to_vec(),
    })
}

/// Sum of the cosines `Σ x_iᵀ u_i = trace(R B)` for the surrogates `U = X B`.
///
/// `B` must give orthonormal surrogates, i.e. `Bᵀ R B = I` within 1e-8.
pub fn psi_score<T: Scalar>(r: &CorrelationMatrix<T>, b: &Matrix<T>) -> Result<T> {
    let m = r.dim();
    if b.rows() != m || b.cols() != m {
        return Err(Error::DimensionMismatch(format!(
            "transformation is {}x{}, expected {m}x{m}",
            b.rows(),
            b.cols()
        )));
    }
    let rb = r.matrix().matmul(b);
    let gram = &b.transpose() * &rb;
    let deviation = gram.max_abs_diff(&Matrix::identity(m));
    if !(deviation <= T::of(1e-8)) {
        return Err(Error::NotOrthonormal {
            deviation: deviation.as_f64(),
        });
    }
    Ok(rb.trace())
}

/// Surrogates `U = X A` for standardised data.
pub fn surrogates<T: Scalar>(x: &StandardizedData<T>, t: &CosMaxTransform<T>) -> Result<Matrix<T>> {
    if x.m() != t.dim() {
        return Err(Error::DimensionMismatch(format!(
            "data have {} columns, transform is {}x{}",
            x.m(),
            t.dim(),
            t.dim()
        )));
    }
    Ok(x.values() * &t.matrix().to_dense())
}
