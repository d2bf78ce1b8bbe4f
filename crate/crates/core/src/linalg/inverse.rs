use super::{eigen_decompose, EigenSystem, SymmetricMatrix};
use crate::{Error, Result, Scalar};

/// Eigenvalues at or below this are treated as an exact collinearity.
pub const DEFAULT_MIN_EIGENVALUE: f64 = 1e-10;

fn checked_eigen<T: Scalar>(m: &SymmetricMatrix<T>, min_eigenvalue: T) -> Result<EigenSystem<T>> {
    let eigen = eigen_decompose(m)?;
    if eigen.smallest() <= min_eigenvalue {
        return Err(Error::ExactCollinearity {
            eigenvalue: eigen.smallest().as_f64(),
            involved: eigen.involved_below(min_eigenvalue),
        });
    }
    Ok(eigen)
}

/// Inverse of a positive-definite matrix, `V diag(1/λ) Vᵀ`.
pub fn inverse_psd<T: Scalar>(m: &SymmetricMatrix<T>, min_eigenvalue: T) -> Result<SymmetricMatrix<T>> {
    let eigen = checked_eigen(m, min_eigenvalue)?;
    Ok(eigen.map_spectrum(|l| l.recip()))
}

/// The symmetric positive-definite inverse square root `V diag(λ^{-1/2}) Vᵀ`.
pub fn inverse_sqrt_psd<T: Scalar>(
    m: &SymmetricMatrix<T>,
    min_eigenvalue: T,
) -> Result<SymmetricMatrix<T>> {
    let eigen = checked_eigen(m, min_eigenvalue)?;
    Ok(eigen.map_spectrum(|l| l.sqrt().recip()))
}
