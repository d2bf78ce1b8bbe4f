//! Collinearity diagnostics for regression: the cos-max transformation,
//! eigenvector analysis with condition indices, and variance-decomposition
//! proportions, side by side.
//!
//! Everything numeric is generic over [`Scalar`] (`f64` or `f32`); the
//! aliases at the bottom of this file fix the common `f64` case.
//!
//! Condition indices are eigenvalue ratios `λ₁ / λ_j`, not singular-value
//! ratios. Packages that report the latter give the square root of these.

pub mod auxiliary;
pub mod data;
pub mod diagnostics;
mod error;
pub mod linalg;
pub mod report;
mod scalar;

pub use error::{Error, Result};
pub use scalar::Scalar;

pub use auxiliary::{
    partial_correlation, r_squared, stepwise_forward, stepwise_forward_with, PartialCorrelation, StepwiseStep,
    StepwiseOptions, StepwiseTrace, StopReason,
};
pub use data::{correlation, load_data, load_matrix, standardize, CorrelationMatrix, RawDataset, StandardizedData};
pub use diagnostics::{
    cosmax, identify_cosmax_sets, identify_eigen_sets, identify_vdp_sets, psi_score, vdp, vif_from_inverse,
    vif_from_regression, CollinearSet, CosMaxTransform, LinkGraph, Method, Thresholds, VdpTable,
};
pub use report::{render_structured, render_text, run, DiagnosticsReport, RunConfig};
pub use linalg::{eigen_decompose, inverse_psd, inverse_sqrt_psd, EigenSystem, Matrix, SymmetricMatrix};

pub type Matrix64 = Matrix<f64>;
pub type SymmetricMatrix64 = SymmetricMatrix<f64>;
pub type EigenSystem64 = EigenSystem<f64>;
pub type CorrelationMatrix64 = CorrelationMatrix<f64>;
pub type CorrelationMatrix32 = CorrelationMatrix<f32>;
pub type RawDataset64 = RawDataset<f64>;
pub type CosMaxTransform64 = CosMaxTransform<f64>;
pub type VdpTable64 = VdpTable<f64>;
pub type CollinearSet64 = CollinearSet<f64>;
pub type StepwiseTrace64 = StepwiseTrace<f64>;
pub type Thresholds64 = Thresholds<f64>;
pub type DiagnosticsReport64 = DiagnosticsReport<f64>;
pub type RunConfig64 = RunConfig<f64>;
