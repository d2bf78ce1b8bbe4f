use cosmax_core::data::{correlation, generate_example4, standardize, RawDataset};
use cosmax_core::linalg::{Matrix, DEFAULT_MIN_EIGENVALUE};
use cosmax_core::{vif_from_inverse, CorrelationMatrix};
use proptest::prelude::*;

fn simulated(n: usize, seed: u64) -> CorrelationMatrix<f64> {
    correlation(&standardize(&generate_example4::<f64>(n, seed).unwrap()).unwrap()).unwrap()
}

#[test]
fn x4_correlates_moderately_with_its_components() {
    // population value is 1 / sqrt(3 + 0.25²) ≈ 0.571
    let seeds = 1000;
    let mut inside = 0;
    for seed in 0..seeds {
        let r = simulated(100, seed);
        for i in 0..8 {
            assert_eq!(r.get(i, i), 1.0);
        }
        if (0..3).all(|k| (0.4..0.8).contains(&r.get(3, k).abs())) {
            inside += 1;
        }
    }
    assert!(inside as f64 / seeds as f64 >= 0.95, "{inside} of {seeds}");
}

#[test]
fn vif_regime_over_seeds() {
    let seeds = 200;
    let mut matching = 0;
    for seed in 0..seeds {
        let vifs = vif_from_inverse(&simulated(100, seed), DEFAULT_MIN_EIGENVALUE).unwrap();
        let low = vifs[4] < 2.0 && vifs[5] < 2.0;
        let high = [0, 1, 2, 3, 6, 7].iter().all(|&i| vifs[i] > 5.0);
        if low && high {
            matching += 1;
        }
    }
    assert!(matching as f64 / seeds as f64 >= 0.95, "{matching} of {seeds}");
}

#[test]
fn large_sample_correlation_pattern() {
    let seeds = 20;
    let mut mean = [0.0; 8];
    for seed in 0..seeds {
        let r = simulated(5000, seed);
        for (k, m) in mean.iter_mut().enumerate() {
            *m += r.get(7, k) / seeds as f64;
        }
    }
    assert!(mean[6] < 0.0, "r(X7, X8) = {}", mean[6]);
    assert!(mean[3] > 0.0);
    for k in 0..3 {
        assert!(mean[3] > mean[k].abs(), "r(X4, X8) = {} vs r(X{}, X8) = {}", mean[3], k + 1, mean[k]);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn correlation_ignores_affine_rescaling(
        seed in any::<u64>(),
        column in 0usize..4,
        scale in 0.1f64..10.0,
        shift in -100.0f64..100.0,
    ) {
        let base = generate_example4::<f64>(30, seed).unwrap();
        let names = base.names()[..4].to_vec();
        let mut values = Matrix::zeros(30, 4);
        let mut moved = Matrix::zeros(30, 4);
        for i in 0..30 {
            for j in 0..4 {
                let v = base.values().get(i, j);
                values.set(i, j, v);
                moved.set(i, j, if j == column { scale * v + shift } else { v });
            }
        }
        let r = correlation(&standardize(&RawDataset::new(names.clone(), values).unwrap()).unwrap()).unwrap();
        let s = correlation(&standardize(&RawDataset::new(names, moved).unwrap()).unwrap()).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                prop_assert!((r.get(i, j) - s.get(i, j)).abs() <= 1e-10);
            }
        }
    }
}
