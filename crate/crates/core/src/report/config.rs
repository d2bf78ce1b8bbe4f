use serde::{Deserialize, Serialize};

use crate::auxiliary::DEFAULT_MIN_GAIN;
use crate::data::EXAMPLE4_NOISE;
use crate::diagnostics::Thresholds;
use crate::{Error, Result, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InputKind {
    /// A correlation matrix in text form.
    Correlation,
    /// Raw observations, one row per observation with a header line.
    RawData,
    /// Data generated from the built-in simulation model.
    Synthetic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OutputFormat {
    Text,
    Structured,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SyntheticSpec {
    pub n: usize,
    pub seed: u64,
    pub noise: f64,
}

impl Default for SyntheticSpec {
    fn default() -> Self {
        Self {
            n: 100,
            seed: 1,
            noise: EXAMPLE4_NOISE,
        }
    }
}

/// A partial-correlation request `i,j|S`, variables given by name or
/// 1-based position.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartialQuery {
    pub i: String,
    pub j: String,
    pub conditioning: Vec<String>,
}

impl std::str::FromStr for PartialQuery {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidConfig(format!("partial correlation query `{s}` is not of the form `i,j|k,l`"));
        let (pair, rest) = match s.split_once('|') {
            Some((pair, rest)) => (pair, Some(rest)),
            None => (s, None),
        };
        let pair: Vec<&str> = pair.split(',').map(str::trim).collect();
        let [i, j] = pair.as_slice() else {
            return Err(bad());
        };
        if i.is_empty() || j.is_empty() {
            return Err(bad());
        }
        let conditioning = match rest.map(str::trim) {
            None | Some("") => Vec::new(),
            Some(rest) => {
                let names: Vec<String> = rest.split(',').map(|c| c.trim().to_string()).collect();
                if names.iter().any(String::is_empty) {
                    return Err(bad());
                }
                names
            }
        };
        Ok(Self {
            i: i.to_string(),
            j: j.to_string(),
            conditioning,
        })
    }
}

impl std::fmt::Display for PartialQuery {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{},{}", self.i, self.j)?;
        if !self.conditioning.is_empty() {
            write!(f, "|{}", self.conditioning.join(","))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig<T> {
    pub input_kind: InputKind,
    pub thresholds: Thresholds<T>,
    pub min_gain: T,
    /// Pool VDP rows with competing condition indices.
    pub aggregate_vdp: bool,
    pub output_format: OutputFormat,
    /// Dependents for stepwise regressions. `None` runs one for every
    /// variable whose VIF exceeds the threshold.
    pub stepwise_targets: Option<Vec<String>>,
    pub max_steps: Option<usize>,
    pub partials: Vec<PartialQuery>,
    pub synthetic: SyntheticSpec,
    /// Number of observations behind a correlation matrix; enables F-tests.
    /// Filled in from the data for raw and synthetic inputs.
    pub n_obs: Option<usize>,
    /// Entry significance level for stepwise regressions; needs `n_obs`.
    pub alpha: Option<T>,
}

impl<T: Scalar> Default for RunConfig<T> {
    fn default() -> Self {
        Self {
            input_kind: InputKind::Correlation,
            thresholds: Thresholds::default(),
            min_gain: T::of(DEFAULT_MIN_GAIN),
            aggregate_vdp: true,
            output_format: OutputFormat::Text,
            stepwise_targets: None,
            max_steps: None,
            partials: Vec::new(),
            synthetic: SyntheticSpec::default(),
            n_obs: None,
            alpha: None,
        }
    }
}

impl<T: Scalar> RunConfig<T> {
    pub fn validate(&self) -> Result<()> {
        let t = &self.thresholds;
        let positive = [
            ("vif threshold", t.vif),
            ("loading threshold", t.loading),
            ("condition-index threshold", t.condition_index),
            ("eigenvector cutoff", t.eigen_cutoff),
            ("minimum eigenvalue", t.min_eigenvalue),
        ];
        for (what, value) in positive {
            if !(value.is_finite() && value > T::zero()) {
                return Err(Error::InvalidConfig(format!("{what} must be positive, got {value}")));
            }
        }
        if !(t.vdp > T::zero() && t.vdp < T::one()) {
            return Err(Error::InvalidConfig(format!("vdp threshold must lie in (0, 1), got {}", t.vdp)));
        }
        if !(t.pool_window.is_finite() && t.pool_window >= T::zero()) {
            return Err(Error::InvalidConfig(format!("pool window must be non-negative, got {}", t.pool_window)));
        }
        if !(self.min_gain.is_finite() && self.min_gain >= T::zero()) {
            return Err(Error::InvalidConfig(format!("minimum gain must be non-negative, got {}", self.min_gain)));
        }
        if let Some(alpha) = self.alpha {
            if !(alpha > T::zero() && alpha < T::one()) {
                return Err(Error::InvalidConfig(format!("alpha must lie in (0, 1), got {alpha}")));
            }
        }
        if self.n_obs == Some(0) {
            return Err(Error::InvalidConfig("number of observations must be positive".into()));
        }
        if self.input_kind == InputKind::Synthetic {
            let s = &self.synthetic;
            if s.n < 10 {
                return Err(Error::InvalidConfig(format!("synthetic mode needs n >= 10, got {}", s.n)));
            }
            if !(s.noise.is_finite() && s.noise >= 0.0) {
                return Err(Error::InvalidConfig(format!("noise scale must be non-negative, got {}", s.noise)));
            }
        }
        Ok(())
    }
}
