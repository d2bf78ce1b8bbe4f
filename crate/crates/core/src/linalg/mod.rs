//! Dense symmetric linear algebra: Jacobi eigendecomposition, inversion of
//! positive-definite matrices and the symmetric inverse square root.

mod cholesky;
mod eigen;
mod inverse;
mod matrix;
mod symmetric;

pub use cholesky::Cholesky;
pub use eigen::{eigen_decompose, EigenSystem, MAX_SWEEPS};
pub use inverse::{inverse_psd, inverse_sqrt_psd, DEFAULT_MIN_EIGENVALUE};
pub use matrix::Matrix;
pub use symmetric::SymmetricMatrix;
