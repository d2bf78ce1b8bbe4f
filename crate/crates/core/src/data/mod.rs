//! Data ingestion, standardisation, correlation matrices and the synthetic
//! overlapping-collinearity generator.

mod correlation;
mod dataset;
mod table;
mod synth;

pub use correlation::{correlation, load_matrix, CorrelationMatrix, PRINTED_TABLE_TOLERANCE};
pub use dataset::{load_data, standardize, RawDataset, StandardizedData};
pub use synth::{generate_example4, generate_example4_with_noise, NormalStream, SplitMix64, EXAMPLE4_NAMES, EXAMPLE4_NOISE};
