//! Random correlation matrices and orthogonal matrices for property tests.

use cosmax_core::data::{correlation, standardize, RawDataset};
use cosmax_core::linalg::{eigen_decompose, Matrix, SymmetricMatrix};
use cosmax_core::CorrelationMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn normal(rng: &mut ChaCha8Rng) -> f64 {
    rng.sample(StandardNormal)
}

/// Correlation matrix of `n` draws from a random linear mixture of normals,
/// so correlations range from weak to strong.
pub fn correlation_matrix(seed: u64, m: usize) -> CorrelationMatrix<f64> {
    let mut rng = rng(seed);
    let n = 3 * m + 10;
    let mix = Matrix::from_fn(m, m, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Equal => 0.2 + rng.gen::<f64>(),
        std::cmp::Ordering::Less => 0.0,
        std::cmp::Ordering::Greater => normal(&mut rng),
    });
    let z = Matrix::from_fn(n, m, |_, _| normal(&mut rng));
    let x = &z * &mix.transpose();
    let names = (1..=m).map(|i| format!("X{i}")).collect();
    let data = RawDataset::new(names, x).unwrap();
    correlation(&standardize(&data).unwrap()).unwrap()
}

pub fn smallest_eigenvalue(r: &CorrelationMatrix<f64>) -> f64 {
    eigen_decompose(r.matrix()).unwrap().smallest()
}

pub fn condition_number(r: &CorrelationMatrix<f64>) -> f64 {
    let e = eigen_decompose(r.matrix()).unwrap();
    e.largest() / e.smallest()
}

/// Haar-ish random orthogonal matrix from Gram–Schmidt on a normal matrix,
/// rejected when it is too close to the identity.
pub fn orthogonal(rng: &mut ChaCha8Rng, m: usize) -> Matrix<f64> {
    loop {
        let mut cols: Vec<Vec<f64>> = Vec::with_capacity(m);
        for _ in 0..m {
            let mut v: Vec<f64> = (0..m).map(|_| normal(rng)).collect();
            for _ in 0..2 {
                for c in &cols {
                    let dot: f64 = v.iter().zip(c).map(|(a, b)| a * b).sum();
                    v.iter_mut().zip(c).for_each(|(a, b)| *a -= dot * b);
                }
            }
            let norm = v.iter().map(|a| a * a).sum::<f64>().sqrt();
            cols.push(v.into_iter().map(|a| a / norm).collect());
        }
        let q = Matrix::from_fn(m, m, |i, j| cols[j][i]);
        if q.max_abs_diff(&Matrix::identity(m)) > 1e-3 {
            return q;
        }
    }
}

/// Block-diagonal correlation matrix; in each block of size `k` the last
/// variable is the sum of the others plus a little noise.
pub fn planted_blocks(seed: u64, sizes: &[usize]) -> CorrelationMatrix<f64> {
    let mut rng = rng(seed);
    let m: usize = sizes.iter().sum();
    let n = 200;
    let mut full = vec![vec![0.0; m]; m];
    let mut offset = 0;
    for &k in sizes {
        let mut x = Matrix::from_fn(n, k, |_, _| normal(&mut rng));
        for row in 0..n {
            let total: f64 = (0..k - 1).map(|j| x.get(row, j)).sum();
            x.set(row, k - 1, total + 0.05 * normal(&mut rng));
        }
        let names = (1..=k).map(|i| format!("V{i}")).collect();
        let r = correlation(&standardize(&RawDataset::new(names, x).unwrap()).unwrap()).unwrap();
        for i in 0..k {
            for j in 0..k {
                full[offset + i][offset + j] = r.get(i, j);
            }
        }
        offset += k;
    }
    let base = SymmetricMatrix::from_rows(&full).unwrap();
    let names = (1..=m).map(|i| format!("X{i}")).collect();
    CorrelationMatrix::new(base, names).unwrap()
}
