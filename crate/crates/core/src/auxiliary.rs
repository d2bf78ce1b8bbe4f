//! Auxiliary regressions and partial correlations computed from the
//! correlation matrix alone.

use serde::{Deserialize, Serialize};
use statrs::distribution::{ContinuousCDF, FisherSnedecor};

use crate::data::CorrelationMatrix;
use crate::linalg::{eigen_decompose, Cholesky, SymmetricMatrix, DEFAULT_MIN_EIGENVALUE};
use crate::{Error, Result, Scalar};

/// Default smallest R² gain for a variable to enter a stepwise regression.
pub const DEFAULT_MIN_GAIN: f64 = 0.01;

fn check_index<T: Scalar>(r: &CorrelationMatrix<T>, i: usize, what: &str) -> Result<()> {
    if i >= r.dim() {
        return Err(Error::InvalidArgument(format!(
            "{what} index {i} out of range for {} variables",
            r.dim()
        )));
    }
    Ok(())
}

fn factor_checked<T: Scalar>(sub: &SymmetricMatrix<T>) -> Result<Cholesky<T>> {
    let smallest = eigen_decompose(sub)?.smallest();
    if smallest <= T::of(DEFAULT_MIN_EIGENVALUE) {
        return Err(Error::SingularPredictors {
            eigenvalue: smallest.as_f64(),
        });
    }
    Cholesky::factor(sub)
}

/// Coefficient of determination of `dependent` regressed on `predictors`,
/// `r_yxᵀ R_xx⁻¹ r_yx`, clamped to [0, 1].
pub fn r_squared<T: Scalar>(r: &CorrelationMatrix<T>, dependent: usize, predictors: &[usize]) -> Result<T> {
    check_index(r, dependent, "dependent")?;
    for (k, &p) in predictors.iter().enumerate() {
        check_index(r, p, "predictor")?;
        if p == dependent {
            return Err(Error::InvalidArgument(format!(
                "variable {} cannot predict itself",
                r.names()[p]
            )));
        }
        if predictors[..k].contains(&p) {
            return Err(Error::InvalidArgument(format!("predictor {} repeated", r.names()[p])));
        }
    }
    if predictors.is_empty() {
        return Ok(T::zero());
    }
    let chol = factor_checked(&r.matrix().submatrix(predictors))?;
    let rhs: Vec<T> = predictors.iter().map(|&p| r.get(dependent, p)).collect();
    let beta = chol.solve(&rhs);
    let value: T = rhs.iter().zip(&beta).map(|(&a, &b)| a * b).sum();
    Ok(value.max(T::zero()).min(T::one()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StopReason {
    GainBelowMin,
    PAboveAlpha,
    MaxSteps,
    AllEntered,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StepwiseStep<T> {
    pub variable: usize,
    pub r_squared: T,
    pub gain: T,
    /// Partial F for the entered variable; present only when the number of
    /// observations is known.
    pub f_statistic: Option<T>,
    pub p_value: Option<T>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StepwiseTrace<T> {
    pub dependent: usize,
    /// Steps accepted by the stopping rule.
    pub steps: Vec<StepwiseStep<T>>,
    /// The full forward path, regardless of where the stopping rule fired.
    pub trajectory: Vec<StepwiseStep<T>>,
    pub stopped_reason: StopReason,
}

impl<T: Scalar> StepwiseTrace<T> {
    pub fn final_r_squared(&self) -> T {
        self.steps.last().map_or(T::zero(), |s| s.r_squared)
    }

    pub fn entered(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.variable).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StepwiseOptions<T> {
    pub min_gain: T,
    pub max_steps: Option<usize>,
    pub n_obs: Option<usize>,
    /// Significance level for entry; only used together with `n_obs`.
    pub alpha: Option<T>,
}

impl<T: Scalar> Default for StepwiseOptions<T> {
    fn default() -> Self {
        Self {
            min_gain: T::of(DEFAULT_MIN_GAIN),
            max_steps: None,
            n_obs: None,
            alpha: None,
        }
    }
}

/// Forward stepwise regression: each step enters the variable with the
/// largest R² increase (lowest index on ties).
pub fn stepwise_forward<T: Scalar>(
    r: &CorrelationMatrix<T>,
    dependent: usize,
    min_gain: T,
    max_steps: usize,
) -> Result<StepwiseTrace<T>> {
    let opts = StepwiseOptions {
        min_gain,
        max_steps: Some(max_steps),
        ..StepwiseOptions::default()
    };
    stepwise_forward_with(r, dependent, &opts)
}

pub fn stepwise_forward_with<T: Scalar>(
    r: &CorrelationMatrix<T>,
    dependent: usize,
    opts: &StepwiseOptions<T>,
) -> Result<StepwiseTrace<T>> {
    check_index(r, dependent, "dependent")?;
    if r.dim() < 2 {
        return Err(Error::InvalidArgument("stepwise regression needs at least 2 variables".into()));
    }
    if !(opts.min_gain >= T::zero()) {
        return Err(Error::InvalidArgument("min_gain must be >= 0".into()));
    }

    let mut entered: Vec<usize> = Vec::new();
    let mut current = T::zero();
    let mut trajectory = Vec::new();
    let mut steps = Vec::new();
    let mut stopped: Option<StopReason> = None;

    while entered.len() + 1 < r.dim() {
        let mut best: Option<(usize, T)> = None;
        let mut failure = None;
        for c in (0..r.dim()).filter(|c| *c != dependent && !entered.contains(c)) {
            let mut trial = entered.clone();
            trial.push(c);
            match r_squared(r, dependent, &trial) {
                Ok(value) => {
                    if best.is_none_or(|(_, b)| value > b) {
                        best = Some((c, value));
                    }
                }
                Err(e) => {
                    failure = Some(e);
                    break;
                }
            }
        }
        if let Some(e) = failure {
            if stopped.is_none() {
                return Err(e);
            }
            // past the stopping point the trajectory is informational only
            break;
        }
        let Some((variable, value)) = best else { break };
        entered.push(variable);
        let value = value.max(current);
        let gain = value - current;
        current = value;

        let (f_statistic, p_value) = match opts.n_obs {
            Some(n) => partial_f(gain, value, n, entered.len()),
            None => (None, None),
        };
        let step = StepwiseStep {
            variable,
            r_squared: value,
            gain,
            f_statistic,
            p_value,
        };

        if stopped.is_none() {
            if opts.max_steps.is_some_and(|k| steps.len() >= k) {
                stopped = Some(StopReason::MaxSteps);
            } else if gain < opts.min_gain {
                stopped = Some(StopReason::GainBelowMin);
            } else if let (Some(alpha), Some(p)) = (opts.alpha, p_value) {
                if p > alpha {
                    stopped = Some(StopReason::PAboveAlpha);
                }
            }
            if stopped.is_none() {
                steps.push(step.clone());
            }
        }
        trajectory.push(step);
    }

    Ok(StepwiseTrace {
        dependent,
        steps,
        trajectory,
        stopped_reason: stopped.unwrap_or(StopReason::AllEntered),
    })
}

/// Partial F test for adding one variable, with an intercept in the model
/// (data are centred), so the residual degrees of freedom are `n - k - 1`.
fn partial_f<T: Scalar>(gain: T, r2: T, n: usize, k: usize) -> (Option<T>, Option<T>) {
    if n <= k + 1 {
        return (None, None);
    }
    let df = (n - k - 1) as f64;
    let residual = (T::one() - r2).as_f64();
    if residual <= 0.0 {
        return (Some(T::infinity()), Some(T::zero()));
    }
    let f = gain.as_f64() / (residual / df);
    let p = FisherSnedecor::new(1.0, df).map(|d| d.sf(f)).ok();
    (Some(T::of(f)), p.map(T::of))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PartialCorrelation<T> {
    pub i: usize,
    pub j: usize,
    pub conditioning: Vec<usize>,
    pub value: T,
}

/// Correlation of `i` and `j` after removing the linear effect of
/// `conditioning`: `-Ω_ij / sqrt(Ω_ii Ω_jj)` with Ω the inverse of the
/// correlation submatrix over `{i, j} ∪ conditioning`.
pub fn partial_correlation<T: Scalar>(
    r: &CorrelationMatrix<T>,
    i: usize,
    j: usize,
    conditioning: &[usize],
) -> Result<PartialCorrelation<T>> {
    check_index(r, i, "first")?;
    check_index(r, j, "second")?;
    if i == j {
        return Err(Error::InvalidArgument("partial correlation needs two distinct variables".into()));
    }
    let mut idx = vec![i, j];
    for &c in conditioning {
        check_index(r, c, "conditioning")?;
        if idx.contains(&c) {
            return Err(Error::InvalidArgument(format!(
                "conditioning set repeats variable {}",
                r.names()[c]
            )));
        }
        idx.push(c);
    }
    let omega = factor_checked(&r.matrix().submatrix(&idx))?.inverse();
    let value = -omega.get(0, 1) / (omega.get(0, 0) * omega.get(1, 1)).sqrt();
    Ok(PartialCorrelation {
        i,
        j,
        conditioning: conditioning.to_vec(),
        value: value.max(-T::one()).min(T::one()),
    })
}
