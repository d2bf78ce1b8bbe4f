use crate::auxiliary::r_squared;
use crate::data::CorrelationMatrix;
use crate::linalg::inverse_psd;
use crate::{Error, Result, Scalar};

/// VIFs as the diagonal of the inverse correlation matrix.
pub fn vif_from_inverse<T: Scalar>(r: &CorrelationMatrix<T>, min_eigenvalue: T) -> Result<Vec<T>> {
    Ok(inverse_psd(r.matrix(), min_eigenvalue)?.diagonal())
}

/// `1 / (1 - R²)` from regressing variable `i` on all the others.
pub fn vif_from_regression<T: Scalar>(r: &CorrelationMatrix<T>, i: usize) -> Result<T> {
    let others: Vec<usize> = (0..r.dim()).filter(|&k| k != i).collect();
    let r2 = r_squared(r, i, &others).map_err(|e| match e {
        Error::SingularPredictors { eigenvalue } => Error::ExactCollinearity {
            eigenvalue,
            involved: others.clone(),
        },
        other => other,
    })?;
    let residual = T::one() - r2;
    if residual <= T::of(1e-10) {
        return Err(Error::ExactCollinearity {
            eigenvalue: residual.as_f64(),
            involved: (0..r.dim()).collect(),
        });
    }
    Ok(residual.recip())
}
