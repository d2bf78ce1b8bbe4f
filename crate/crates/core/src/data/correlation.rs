use super::table::{parse_number, parse_table};
use super::StandardizedData;
use crate::linalg::{eigen_decompose, SymmetricMatrix};
use crate::{Error, Result, Scalar};

/// Largest asymmetry tolerated in a printed (3-decimal) correlation table.
pub const PRINTED_TABLE_TOLERANCE: f64 = 5e-4;

const NOT_PSD_CUTOFF: f64 = -1e-6;

/// Correlation matrix of named regressors: unit diagonal, entries in [-1, 1].
#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationMatrix<T> {
    base: SymmetricMatrix<T>,
    names: Vec<String>,
}

impl<T: Scalar> CorrelationMatrix<T> {
    pub fn new(base: SymmetricMatrix<T>, names: Vec<String>) -> Result<Self> {
        if names.len() != base.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} names for a {}x{} matrix",
                names.len(),
                base.dim(),
                base.dim()
            )));
        }
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return Err(Error::InvalidArgument(format!("duplicate variable name `{name}`")));
            }
        }
        let tol = T::of(1e-12);
        for i in 0..base.dim() {
            if (base.get(i, i) - T::one()).abs() > tol {
                return Err(Error::InvalidArgument(format!(
                    "diagonal entry {} is {}, expected 1",
                    i + 1,
                    base.get(i, i)
                )));
            }
            for j in 0..i {
                if !(base.get(i, j).abs() <= T::one()) {
                    return Err(Error::InvalidArgument(format!(
                        "correlation ({}, {}) = {} lies outside [-1, 1]",
                        i + 1,
                        j + 1,
                        base.get(i, j)
                    )));
                }
            }
        }
        Ok(Self { base, names })
    }

    /// Convenience constructor with names `X1, X2, …`.
    pub fn from_rows(rows: &[Vec<T>]) -> Result<Self> {
        let base = SymmetricMatrix::from_rows(rows)?;
        let names = default_names(base.dim());
        Self::new(base, names)
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            base: SymmetricMatrix::identity(dim),
            names: default_names(dim),
        }
    }

    pub fn matrix(&self) -> &SymmetricMatrix<T> {
        &self.base
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        self.base.get(i, j)
    }

    /// Resolves a variable by exact name, or by 1-based position.
    pub fn index_of(&self, key: &str) -> Option<usize> {
        let key = key.trim();
        self.names.iter().position(|n| n == key).or_else(|| {
            key.parse::<usize>()
                .ok()
                .filter(|&k| (1..=self.dim()).contains(&k))
                .map(|k| k - 1)
        })
    }
}

fn default_names(dim: usize) -> Vec<String> {
    (1..=dim).map(|i| format!("X{i}")).collect()
}

/// `XᵀX` of standardised data.
pub fn correlation<T: Scalar>(d: &StandardizedData<T>) -> Result<CorrelationMatrix<T>> {
    let x = d.values();
    let base = SymmetricMatrix::from_lower_fn(d.m(), |i, j| {
        let dot: T = (0..d.n()).map(|k| x.get(k, i) * x.get(k, j)).sum();
        dot.max(-T::one()).min(T::one())
    });
    // unit diagonal is only accurate to rounding; pin it
    let base = SymmetricMatrix::from_lower_fn(d.m(), |i, j| if i == j { T::one() } else { base.get(i, j) });
    CorrelationMatrix::new(base, d.names().to_vec())
}

/// Reads a correlation table: a header of names, then `m` rows of `m`
/// values. Each row may start with its variable label.
///
/// Printed tables are rounded, so `(i, j)` and `(j, i)` are averaged after
/// checking they agree within [`PRINTED_TABLE_TOLERANCE`].
pub fn load_matrix<T: Scalar>(text: &str) -> Result<CorrelationMatrix<T>> {
    let table = parse_table(text)?;
    let m = table.header.len();
    if m < 2 {
        return Err(Error::Parse {
            line: 1,
            column: 1,
            message: "need at least 2 variables".into(),
        });
    }
    if table.records.len() != m {
        return Err(Error::Parse {
            line: table.records.last().map_or(1, |r| r.line),
            column: 1,
            message: format!("expected {m} matrix rows, found {}", table.records.len()),
        });
    }

    let mut rows = vec![vec![0.0f64; m]; m];
    for (i, rec) in table.records.iter().enumerate() {
        let fields: &[&str] = match rec.fields.len() {
            k if k == m => &rec.fields,
            k if k == m + 1 => &rec.fields[1..],
            k => {
                return Err(Error::Parse {
                    line: rec.line,
                    column: k.min(m) + 1,
                    message: format!("expected {m} values, found {k}"),
                })
            }
        };
        let offset = rec.fields.len() - m;
        for (j, field) in fields.iter().enumerate() {
            let column = j + offset + 1;
            let v = parse_number(field, rec.line, column)?;
            let ok = if i == j {
                (v - 1.0).abs() <= PRINTED_TABLE_TOLERANCE
            } else {
                v.abs() <= 1.0
            };
            if !ok {
                return Err(Error::Parse {
                    line: rec.line,
                    column,
                    message: format!("correlation {v} out of range"),
                });
            }
            rows[i][j] = v;
        }
    }

    for i in 0..m {
        for j in 0..i {
            let diff = (rows[i][j] - rows[j][i]).abs();
            if diff > PRINTED_TABLE_TOLERANCE {
                return Err(Error::Asymmetry {
                    row: i,
                    column: j,
                    difference: diff,
                });
            }
        }
    }
    let base = SymmetricMatrix::from_lower_fn(m, |i, j| {
        if i == j {
            T::one()
        } else {
            T::of(0.5 * (rows[i][j] + rows[j][i]))
        }
    });
    let eigen = eigen_decompose(&base)?;
    if eigen.smallest() < T::of(NOT_PSD_CUTOFF) {
        return Err(Error::NotPsd {
            eigenvalue: eigen.smallest().as_f64(),
        });
    }
    let names = table.header.iter().map(|s| s.to_string()).collect();
    CorrelationMatrix::new(base, names)
}
