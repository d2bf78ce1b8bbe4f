use super::table::{parse_number, parse_table};
use crate::linalg::Matrix;
use crate::{Error, Result, Scalar};

/// Observations (rows) on named regressors (columns).
#[derive(Debug, Clone, PartialEq)]
pub struct RawDataset<T> {
    names: Vec<String>,
    values: Matrix<T>,
}

impl<T: Scalar> RawDataset<T> {
    pub fn new(names: Vec<String>, values: Matrix<T>) -> Result<Self> {
        if values.cols() != names.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} names for {} columns",
                names.len(),
                values.cols()
            )));
        }
        if values.rows() < 2 {
            return Err(Error::InvalidArgument("need at least 2 observations".into()));
        }
        if values.cols() < 2 {
            return Err(Error::InvalidArgument("need at least 2 variables".into()));
        }
        if !values.is_finite() {
            return Err(Error::InvalidArgument("data contain non-finite values".into()));
        }
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return Err(Error::InvalidArgument(format!("duplicate variable name `{name}`")));
            }
        }
        Ok(Self { names, values })
    }

    pub fn n(&self) -> usize {
        self.values.rows()
    }

    pub fn m(&self) -> usize {
        self.values.cols()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn values(&self) -> &Matrix<T> {
        &self.values
    }

    /// Writes the dataset as comma-separated text with a header row.
    pub fn to_csv(&self) -> String {
        let mut out = self.names.join(",");
        out.push('\n');
        for i in 0..self.n() {
            let row: Vec<String> = self.values.row(i).iter().map(|v| format!("{v:?}")).collect();
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

/// Columns centred to mean zero and scaled to unit Euclidean norm, so that
/// `XᵀX` is the correlation matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct StandardizedData<T> {
    names: Vec<String>,
    values: Matrix<T>,
}

impl<T: Scalar> StandardizedData<T> {
    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn values(&self) -> &Matrix<T> {
        &self.values
    }

    pub fn n(&self) -> usize {
        self.values.rows()
    }

    pub fn m(&self) -> usize {
        self.values.cols()
    }

    /// Treats already-standardised columns as raw data.
    pub fn to_raw(&self) -> RawDataset<T> {
        RawDataset {
            names: self.names.clone(),
            values: self.values.clone(),
        }
    }
}

pub fn standardize<T: Scalar>(d: &RawDataset<T>) -> Result<StandardizedData<T>> {
    let n = d.n();
    let nt = T::from_usize(n).expect("row count fits the scalar type");
    let mut values = d.values.clone();
    for j in 0..d.m() {
        let col = d.values.column(j);
        let mean = col.iter().copied().sum::<T>() / nt;
        let centred: Vec<T> = col.iter().map(|&v| v - mean).collect();
        let norm = centred.iter().map(|&v| v * v).sum::<T>().sqrt();
        let scale = col.iter().fold(T::zero(), |acc, v| acc.max(v.abs()));
        if norm <= T::epsilon() * scale * nt || norm == T::zero() {
            return Err(Error::ConstantColumn {
                name: d.names[j].clone(),
            });
        }
        for (i, v) in centred.into_iter().enumerate() {
            values.set(i, j, v / norm);
        }
    }
    Ok(StandardizedData {
        names: d.names.clone(),
        values,
    })
}

/// Reads a raw dataset: header of names, one row per observation.
pub fn load_data<T: Scalar>(text: &str) -> Result<RawDataset<T>> {
    let table = parse_table(text)?;
    let m = table.header.len();
    let mut rows = Vec::with_capacity(table.records.len());
    for rec in &table.records {
        if rec.fields.len() != m {
            return Err(Error::Parse {
                line: rec.line,
                column: rec.fields.len().min(m) + 1,
                message: format!("expected {m} fields, found {}", rec.fields.len()),
            });
        }
        let row = rec
            .fields
            .iter()
            .enumerate()
            .map(|(c, f)| parse_number(f, rec.line, c + 1).map(T::of))
            .collect::<Result<Vec<T>>>()?;
        rows.push(row);
    }
    if rows.len() < 2 {
        return Err(Error::Parse {
            line: table.records.last().map_or(1, |r| r.line),
            column: 1,
            message: format!("need at least 2 observations, found {}", rows.len()),
        });
    }
    if m < 2 {
        return Err(Error::Parse {
            line: 1,
            column: 1,
            message: "need at least 2 variables".into(),
        });
    }
    let names = table.header.iter().map(|s| s.to_string()).collect();
    RawDataset::new(names, Matrix::from_rows(&rows))
}
