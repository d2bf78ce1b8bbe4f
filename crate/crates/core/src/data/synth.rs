//! Reproducible generator for data with two overlapping collinearities.
//!
//! Random numbers come from SplitMix64: the state advances by
//! `0x9E3779B97F4A7C15` and each output is mixed with the constants
//! `0xBF58476D1CE4E5B9` and `0x94D049BB133111EB` (shifts 30, 27, 31).
//! A 64-bit output `z` maps to the open unit interval as
//! `((z >> 11) + 0.5) / 2^53`. Normal deviates use the Box–Muller
//! transform on consecutive uniforms `(u1, u2)`, yielding
//! `sqrt(-2 ln u1) cos(2π u2)` followed by `sqrt(-2 ln u1) sin(2π u2)`.
//!
//! For each observation, eight normals are drawn in the order
//! X1, X2, X3, X5, X6, X7, ε₁, ε₂ and combined as
//! `X4 = X1 + X2 + X3 + σ ε₁`, `X8 = X4 − X7 + σ ε₂` with σ = 0.25 by default.

use super::RawDataset;
use crate::linalg::Matrix;
use crate::{Error, Result, Scalar};

pub const EXAMPLE4_NOISE: f64 = 0.25;
pub const EXAMPLE4_NAMES: [&str; 8] = ["X1", "X2", "X3", "X4", "X5", "X6", "X7", "X8"];

#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform on the open interval (0, 1).
    pub fn next_open01(&mut self) -> f64 {
        ((self.next_u64() >> 11) as f64 + 0.5) * (1.0 / (1u64 << 53) as f64)
    }
}

/// Standard normal deviates by Box–Muller, both outputs of a pair used.
#[derive(Debug, Clone)]
pub struct NormalStream {
    rng: SplitMix64,
    spare: Option<f64>,
}

impl NormalStream {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: SplitMix64::new(seed),
            spare: None,
        }
    }

    pub fn next_normal(&mut self) -> f64 {
        if let Some(z) = self.spare.take() {
            return z;
        }
        let u1 = self.rng.next_open01();
        let u2 = self.rng.next_open01();
        let r = (-2.0 * u1.ln()).sqrt();
        let theta = 2.0 * std::f64::consts::PI * u2;
        self.spare = Some(r * theta.sin());
        r * theta.cos()
    }
}

pub fn generate_example4<T: Scalar>(n: usize, seed: u64) -> Result<RawDataset<T>> {
    generate_example4_with_noise(n, seed, EXAMPLE4_NOISE)
}

/// Same generator with a chosen noise scale; `noise = 0` makes both
/// collinearities exact.
pub fn generate_example4_with_noise<T: Scalar>(n: usize, seed: u64, noise: f64) -> Result<RawDataset<T>> {
    if n < 10 {
        return Err(Error::InvalidConfig(format!("need n >= 10 observations, got {n}")));
    }
    if !(noise >= 0.0 && noise.is_finite()) {
        return Err(Error::InvalidConfig(format!("noise scale must be finite and >= 0, got {noise}")));
    }
    let mut normals = NormalStream::new(seed);
    let mut values = Matrix::zeros(n, 8);
    for i in 0..n {
        let mut draw = [0.0f64; 8];
        for d in draw.iter_mut() {
            *d = normals.next_normal();
        }
        let [x1, x2, x3, x5, x6, x7, e1, e2] = draw;
        let x4 = x1 + x2 + x3 + noise * e1;
        let x8 = x4 - x7 + noise * e2;
        for (j, v) in [x1, x2, x3, x4, x5, x6, x7, x8].into_iter().enumerate() {
            values.set(i, j, T::of(v));
        }
    }
    RawDataset::new(EXAMPLE4_NAMES.iter().map(|s| s.to_string()).collect(), values)
}
