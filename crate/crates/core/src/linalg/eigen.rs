use super::{Matrix, SymmetricMatrix};
use crate::{Error, Result, Scalar};

/// Hard cap on cyclic Jacobi sweeps.
pub const MAX_SWEEPS: usize = 100;

/// Eigenvalues in descending order with their orthonormal eigenvectors.
///
/// Column `j` of `eigenvectors` pairs with `eigenvalues[j]`. Each eigenvector
/// is signed so that its entry of largest magnitude is positive (the lowest
/// index wins a tie).
#[derive(Debug, Clone, PartialEq)]
pub struct EigenSystem<T> {
    eigenvalues: Vec<T>,
    eigenvectors: Matrix<T>,
}

impl<T: Scalar> EigenSystem<T> {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn eigenvalues(&self) -> &[T] {
        &self.eigenvalues
    }

    /// Eigenvectors as matrix columns.
    pub fn eigenvectors(&self) -> &Matrix<T> {
        &self.eigenvectors
    }

    pub fn eigenvector(&self, j: usize) -> Vec<T> {
        self.eigenvectors.column(j)
    }

    pub fn largest(&self) -> T {
        self.eigenvalues[0]
    }

    pub fn smallest(&self) -> T {
        self.eigenvalues[self.dim() - 1]
    }

    /// `λ₁ / λ_j` for every eigenvalue. This is the eigenvalue-ratio
    /// convention; packages that use singular values of X report the square
    /// root of these numbers.
    pub fn condition_indices(&self) -> Vec<T> {
        let top = self.largest();
        self.eigenvalues.iter().map(|&l| top / l).collect()
    }

    /// `Σ_j f(λ_j) v_j v_jᵀ`.
    pub fn map_spectrum(&self, f: impl Fn(T) -> T) -> SymmetricMatrix<T> {
        let weights: Vec<T> = self.eigenvalues.iter().map(|&l| f(l)).collect();
        let v = &self.eigenvectors;
        SymmetricMatrix::from_lower_fn(self.dim(), |i, k| {
            (0..weights.len())
                .map(|j| weights[j] * v.get(i, j) * v.get(k, j))
                .sum()
        })
    }

    pub fn reconstruct(&self) -> SymmetricMatrix<T> {
        self.map_spectrum(|l| l)
    }

    /// Variables with a sizeable loading on eigenvectors whose eigenvalue is
    /// at or below `cutoff`.
    pub(crate) fn involved_below(&self, cutoff: T) -> Vec<usize> {
        let loading = T::of(0.1);
        let mut out: Vec<usize> = (0..self.dim())
            .filter(|&j| self.eigenvalues[j] <= cutoff)
            .flat_map(|j| (0..self.dim()).filter(move |&i| self.eigenvectors.get(i, j).abs() >= loading))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// Cyclic Jacobi eigendecomposition of a symmetric matrix.
///
/// Sweeps run over every (p, q) pair in row order until the squared
/// off-diagonal mass is at most `T::JACOBI_TOLERANCE · ‖m‖_F²`.
pub fn eigen_decompose<T: Scalar>(m: &SymmetricMatrix<T>) -> Result<EigenSystem<T>> {
    if !m.is_finite() {
        return Err(Error::InvalidArgument("matrix has non-finite entries".into()));
    }
    let n = m.dim();
    let mut a = m.to_dense();
    let mut v = Matrix::identity(n);

    let norm_sq = {
        let f = m.frobenius_norm();
        f * f
    };
    let target = norm_sq * T::of(T::JACOBI_TOLERANCE);

    let mut converged = false;
    for _ in 0..=MAX_SWEEPS {
        if off_diagonal_sq(&a) <= target {
            converged = true;
            break;
        }
        sweep(&mut a, &mut v);
    }
    if !converged {
        return Err(Error::NonConvergence { sweeps: MAX_SWEEPS });
    }

    let mut order: Vec<usize> = (0..n).collect();
    // stable sort keeps the original position for equal eigenvalues
    order.sort_by(|&x, &y| a.get(y, y).partial_cmp(&a.get(x, x)).expect("finite eigenvalues"));

    let eigenvalues: Vec<T> = order.iter().map(|&k| a.get(k, k)).collect();
    let mut eigenvectors = Matrix::from_fn(n, n, |i, j| v.get(i, order[j]));
    for j in 0..n {
        let mut lead = 0;
        for i in 1..n {
            if eigenvectors.get(i, j).abs() > eigenvectors.get(lead, j).abs() {
                lead = i;
            }
        }
        if eigenvectors.get(lead, j) < T::zero() {
            for i in 0..n {
                eigenvectors.set(i, j, -eigenvectors.get(i, j));
            }
        }
    }

    Ok(EigenSystem {
        eigenvalues,
        eigenvectors,
    })
}

fn off_diagonal_sq<T: Scalar>(a: &Matrix<T>) -> T {
    let n = a.rows();
    let mut sum = T::zero();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum = sum + a.get(i, j) * a.get(i, j);
            }
        }
    }
    sum
}

fn sweep<T: Scalar>(a: &mut Matrix<T>, v: &mut Matrix<T>) {
    let n = a.rows();
    let two = T::of(2.0);
    for p in 0..n {
        for q in (p + 1)..n {
            let apq = a.get(p, q);
            if apq == T::zero() {
                continue;
            }
            let tau = (a.get(q, q) - a.get(p, p)) / (two * apq);
            let t = if tau >= T::zero() {
                T::one() / (tau + (T::one() + tau * tau).sqrt())
            } else {
                -T::one() / (-tau + (T::one() + tau * tau).sqrt())
            };
            let c = T::one() / (T::one() + t * t).sqrt();
            let s = t * c;

            // A <- A J
            for k in 0..n {
                let akp = a.get(k, p);
                let akq = a.get(k, q);
                a.set(k, p, c * akp - s * akq);
                a.set(k, q, s * akp + c * akq);
            }
            // A <- Jᵀ A
            for k in 0..n {
                let apk = a.get(p, k);
                let aqk = a.get(q, k);
                a.set(p, k, c * apk - s * aqk);
                a.set(q, k, s * apk + c * aqk);
            }
            a.set(p, q, T::zero());
            a.set(q, p, T::zero());

            for k in 0..n {
                let vkp = v.get(k, p);
                let vkq = v.get(k, q);
                v.set(k, p, c * vkp - s * vkq);
                v.set(k, q, s * vkp + c * vkq);
            }
        }
    }
}
