use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("Jacobi eigensolver did not converge after {sweeps} sweeps")]
    NonConvergence { sweeps: usize },

    #[error("exact collinearity: eigenvalue {eigenvalue:e} is not above the singularity cutoff (involves variables {involved:?})")]
    ExactCollinearity { eigenvalue: f64, involved: Vec<usize> },

    #[error("singular predictor set: smallest eigenvalue {eigenvalue:e}")]
    SingularPredictors { eigenvalue: f64 },

    #[error("column `{name}` has zero variance")]
    ConstantColumn { name: String },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("matrix is not symmetric: entries ({row}, {column}) differ by {difference:e}")]
    Asymmetry { row: usize, column: usize, difference: f64 },

    #[error("matrix is not positive semidefinite: eigenvalue {eigenvalue:e}")]
    NotPsd { eigenvalue: f64 },

    #[error("transformation columns are not orthonormal: max deviation {deviation:e}")]
    NotOrthonormal { deviation: f64 },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}
