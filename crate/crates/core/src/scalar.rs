//! Floating-point abstraction shared by every numerical routine in the crate.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, ToPrimitive};
use serde::de::DeserializeOwned;
use serde::Serialize;

/// Real scalar the diagnostics are computed in.
///
/// Implemented for `f64` (the default used by the CLI) and `f32`.
pub trait Scalar:
    Float
    + FromPrimitive
    + ToPrimitive
    + Sum
    + Debug
    + Display
    + Default
    + Send
    + Sync
    + Serialize
    + DeserializeOwned
    + 'static
{
    /// Jacobi sweeps stop once the squared off-diagonal mass falls below
    /// this fraction of the squared Frobenius norm.
    const JACOBI_TOLERANCE: f64;

    /// Converts an `f64` literal into this scalar type.
    fn of(value: f64) -> Self;

    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f64 {
    const JACOBI_TOLERANCE: f64 = 1e-24;

    #[inline]
    fn of(value: f64) -> Self {
        value
    }
}

impl Scalar for f32 {
    const JACOBI_TOLERANCE: f64 = 1e-11;

    #[inline]
    fn of(value: f64) -> Self {
        value as f32
    }
}
