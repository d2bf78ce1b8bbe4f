//! The three identification methods: VIFs with the cos-max transformation,
//! eigenvector analysis with condition indices, and variance-decomposition
//! proportions.

mod cosmax;
mod sets;
mod vdp;
mod vif;

pub use cosmax::{cosmax, psi_score, surrogates, CosMaxTransform};
pub use sets::{
    identify_cosmax_sets, identify_eigen_sets, identify_vdp_sets, Anchor, CollinearSet, CosMaxIdentification,
    LinkGraph, Method, BORDERLINE_FRACTION,
};
pub use vdp::{vdp, vdp_from_eigen, VdpTable};
pub use vif::{vif_from_inverse, vif_from_regression};

/// Working thresholds, defaulting to the values the method was published with.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Thresholds<T> {
    /// VIFs above this mark a variable as involved in a collinearity.
    pub vif: T,
    /// |a_ji| above this puts X_j in the collinearity of anchor X_i.
    pub loading: T,
    /// Condition index (λ₁/λ_j) at which an eigen-direction is inspected.
    pub condition_index: T,
    /// |v_ij| above this puts X_i in the eigenvector's set.
    pub eigen_cutoff: T,
    /// Variance-decomposition proportion above which a variable is involved.
    pub vdp: T,
    /// Qualifying condition indices within this relative distance are pooled.
    pub pool_window: T,
    /// Eigenvalues at or below this signal an exact collinearity.
    pub min_eigenvalue: T,
}

impl<T: crate::Scalar> Default for Thresholds<T> {
    fn default() -> Self {
        Self {
            vif: T::of(5.0),
            loading: T::of(0.75),
            condition_index: T::of(100.0),
            eigen_cutoff: T::of(0.26),
            vdp: T::of(0.5),
            pool_window: T::of(0.25),
            min_eigenvalue: T::of(crate::linalg::DEFAULT_MIN_EIGENVALUE),
        }
    }
}
