//! Running the full pipeline over one input and rendering the result.

mod config;
mod model;
mod render;

pub use config::{InputKind, OutputFormat, PartialQuery, RunConfig, SyntheticSpec};
pub use model::{
    run, BorderlineNote, CosMaxSection, DiagnosticsReport, EigenSection, FlaggedEntry, Quantity, ReportedAnchor,
    ReportedGraph, ReportedPartial, ReportedSet, ReportedStep, ReportedTrace, SCHEMA_VERSION,
};
pub use render::{parse_structured, render_structured, render_text};

use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_OTHER: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_EXACT_COLLINEARITY: i32 = 3;
pub const EXIT_INVALID_CONFIG: i32 = 4;

/// Process exit status for a failed run.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Parse { .. } | Error::Asymmetry { .. } | Error::NotPsd { .. } | Error::Io(_) => EXIT_PARSE,
        Error::ExactCollinearity { .. } | Error::SingularPredictors { .. } | Error::ConstantColumn { .. } => {
            EXIT_EXACT_COLLINEARITY
        }
        Error::InvalidConfig(_) | Error::InvalidArgument(_) | Error::DimensionMismatch(_) => EXIT_INVALID_CONFIG,
        Error::NonConvergence { .. } | Error::NotOrthonormal { .. } => EXIT_OTHER,
    }
}
