use serde::{Deserialize, Serialize};

use super::config::{InputKind, RunConfig};
use crate::auxiliary::{partial_correlation, stepwise_forward_with, StepwiseOptions, StepwiseStep, StopReason};
use crate::data::{
    correlation, generate_example4_with_noise, load_data, load_matrix, standardize, CorrelationMatrix,
    StandardizedData,
};
use crate::diagnostics::{
    cosmax, identify_cosmax_sets, identify_eigen_sets, identify_vdp_sets, psi_score, surrogates, vdp_from_eigen,
    CollinearSet, Method, BORDERLINE_FRACTION,
};
use crate::linalg::{eigen_decompose, Matrix};
use crate::{Error, Result, Scalar};

/// Version of the structured report layout.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EigenSection<T> {
    /// Descending.
    pub eigenvalues: Vec<T>,
    pub condition_indices: Vec<T>,
    /// `vectors[j]` is the unit eigenvector of `eigenvalues[j]`.
    pub vectors: Vec<Vec<T>>,
    /// Directions whose condition index reaches the threshold.
    pub flagged: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FlaggedEntry<T> {
    /// Anchor variable (row of A).
    pub row: String,
    pub column: String,
    pub value: T,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CosMaxSection<T> {
    /// Rows `a_iᵀ` of the symmetric transformation A.
    pub matrix: Vec<Vec<T>>,
    /// Off-diagonal entries of anchor rows above the loading threshold.
    pub flagged: Vec<FlaggedEntry<T>>,
    /// Σ xᵢᵀuᵢ at the optimum.
    pub psi: T,
    /// max |UᵀU − I| for the surrogates; only for data inputs.
    pub surrogate_orthonormality_error: Option<T>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportedAnchor<T> {
    /// Variable name for cos-max sets, `v<j>` (1-based) for eigen directions.
    pub name: String,
    pub index: usize,
    /// VIF for cos-max sets, condition index otherwise.
    pub score: T,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportedSet<T> {
    pub method: Method,
    pub members: Vec<String>,
    pub anchors: Vec<ReportedAnchor<T>>,
    pub evidence: Vec<Vec<T>>,
    pub degenerate: bool,
    pub pooled: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportedGraph {
    pub nodes: Vec<String>,
    pub edges: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportedStep<T> {
    pub variable: String,
    pub r_squared: T,
    pub gain: T,
    pub f_statistic: Option<T>,
    pub p_value: Option<T>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportedTrace<T> {
    pub dependent: String,
    pub steps: Vec<ReportedStep<T>>,
    /// The unstopped forward path, for judging where a cut-off would fall.
    pub trajectory: Vec<ReportedStep<T>>,
    pub stopped_reason: StopReason,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportedPartial<T> {
    pub i: String,
    pub j: String,
    pub conditioning: Vec<String>,
    pub value: T,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    Vif,
    CosmaxLoading,
    EigenvectorLoading,
    Vdp,
}

/// A value within the borderline band just below its threshold.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BorderlineNote<T> {
    pub quantity: Quantity,
    /// The row the value was read from: anchor variable, eigen direction,
    /// or (for VIFs) the variable itself.
    pub source: String,
    pub variable: String,
    pub value: T,
    pub threshold: T,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiagnosticsReport<T> {
    pub schema_version: u32,
    pub config: RunConfig<T>,
    pub names: Vec<String>,
    pub correlation: Vec<Vec<T>>,
    pub vifs: Vec<T>,
    pub eigen: EigenSection<T>,
    /// Row `j` holds π_ji for eigenvalue j across variables i.
    pub vdp: Vec<Vec<T>>,
    pub cosmax: CosMaxSection<T>,
    pub sets: Vec<ReportedSet<T>>,
    pub link_graph: ReportedGraph,
    /// Connected groups of the link graph.
    pub families: Vec<Vec<String>>,
    pub stepwise: Vec<ReportedTrace<T>>,
    pub partials: Vec<ReportedPartial<T>>,
    pub borderline: Vec<BorderlineNote<T>>,
}

impl<T: Scalar> DiagnosticsReport<T> {
    pub fn sets_for(&self, method: Method) -> impl Iterator<Item = &ReportedSet<T>> {
        self.sets.iter().filter(move |s| s.method == method)
    }

    /// True when no method produced a set with two or more members.
    pub fn is_clean(&self) -> bool {
        self.sets.iter().all(|s| s.degenerate)
    }
}

fn direction_name(j: usize) -> String {
    format!("v{}", j + 1)
}

fn resolve<T: Scalar>(r: &CorrelationMatrix<T>, key: &str) -> Result<usize> {
    r.index_of(key)
        .ok_or_else(|| Error::InvalidConfig(format!("unknown variable `{key}`")))
}

fn load<T: Scalar>(
    config: &RunConfig<T>,
    input: Option<&str>,
) -> Result<(CorrelationMatrix<T>, Option<StandardizedData<T>>)> {
    let text = || input.ok_or_else(|| Error::InvalidConfig("no input given".into()));
    match config.input_kind {
        InputKind::Correlation => Ok((load_matrix(text()?)?, None)),
        InputKind::RawData => {
            let x = standardize(&load_data(text()?)?)?;
            Ok((correlation(&x)?, Some(x)))
        }
        InputKind::Synthetic => {
            let s = &config.synthetic;
            let x = standardize(&generate_example4_with_noise(s.n, s.seed, s.noise)?)?;
            Ok((correlation(&x)?, Some(x)))
        }
    }
}

/// Runs every method over one input. `input` is the file contents and is
/// ignored in synthetic mode.
pub fn run<T: Scalar>(config: &RunConfig<T>, input: Option<&str>) -> Result<DiagnosticsReport<T>> {
    config.validate()?;
    let (r, data) = load(config, input)?;
    let mut config = config.clone();
    if let Some(x) = &data {
        config.n_obs = Some(x.n());
    }
    let t = &config.thresholds;
    let names = r.names().to_vec();
    let name = |i: usize| names[i].clone();

    let eigen = eigen_decompose(r.matrix())?;
    let table = vdp_from_eigen(&eigen, t.min_eigenvalue)?;
    let transform = cosmax(&r, t.min_eigenvalue)?;
    let vifs = transform.vifs().to_vec();
    let a = transform.matrix().to_dense();
    let psi = psi_score(&r, &a)?;
    let surrogate_orthonormality_error = match &data {
        Some(x) => {
            let u = surrogates(x, &transform)?;
            let gram = &u.transpose() * &u;
            Some(gram.max_abs_diff(&Matrix::identity(r.dim())))
        }
        None => None,
    };

    let found = identify_cosmax_sets(&transform, t.vif, t.loading);
    let mut raw_sets: Vec<CollinearSet<T>> = found.sets.clone();
    raw_sets.extend(identify_eigen_sets(&eigen, t.condition_index, t.eigen_cutoff));
    raw_sets.extend(identify_vdp_sets(
        &table,
        t.condition_index,
        t.vdp,
        config.aggregate_vdp,
        t.pool_window,
    ));

    let mut borderline = Vec::new();
    let vif_low = t.vif * T::of(1.0 - BORDERLINE_FRACTION);
    for (i, &v) in vifs.iter().enumerate() {
        if v >= vif_low && v <= t.vif {
            borderline.push(BorderlineNote {
                quantity: Quantity::Vif,
                source: name(i),
                variable: name(i),
                value: v,
                threshold: t.vif,
            });
        }
    }

    let mut sets = Vec::new();
    for s in &raw_sets {
        let anchor_name = |index: usize| match s.method {
            Method::Cosmax => name(index),
            _ => direction_name(index),
        };
        let (quantity, threshold) = match s.method {
            Method::Cosmax => (Quantity::CosmaxLoading, t.loading),
            Method::Eigenvector => (Quantity::EigenvectorLoading, t.eigen_cutoff),
            Method::Vdp => (Quantity::Vdp, t.vdp),
        };
        for b in &s.borderline {
            let source = if s.pooled {
                s.anchors.iter().map(|a| anchor_name(a.index)).collect::<Vec<_>>().join("+")
            } else {
                anchor_name(s.anchors[b.anchor].index)
            };
            borderline.push(BorderlineNote {
                quantity: quantity.clone(),
                source,
                variable: name(b.variable),
                value: b.value,
                threshold,
            });
        }
        sets.push(ReportedSet {
            method: s.method,
            members: s.members.iter().map(|&i| name(i)).collect(),
            anchors: s
                .anchors
                .iter()
                .map(|a| ReportedAnchor {
                    name: anchor_name(a.index),
                    index: a.index,
                    score: a.score,
                })
                .collect(),
            evidence: s.evidence.clone(),
            degenerate: s.degenerate,
            pooled: s.pooled,
        });
    }

    let mut flagged = Vec::new();
    for (i, &vif) in vifs.iter().enumerate() {
        if vif > t.vif {
            for j in (0..r.dim()).filter(|&j| j != i) {
                let value = a.get(i, j);
                if value.abs() > t.loading {
                    flagged.push(FlaggedEntry {
                        row: name(i),
                        column: name(j),
                        value,
                    });
                }
            }
        }
    }

    let targets: Vec<usize> = match &config.stepwise_targets {
        Some(keys) => keys.iter().map(|k| resolve(&r, k)).collect::<Result<_>>()?,
        None => (0..r.dim()).filter(|&i| vifs[i] > t.vif).collect(),
    };
    let options = StepwiseOptions {
        min_gain: config.min_gain,
        max_steps: config.max_steps,
        n_obs: config.n_obs,
        alpha: config.alpha,
    };
    let step = |s: &StepwiseStep<T>| ReportedStep {
        variable: name(s.variable),
        r_squared: s.r_squared,
        gain: s.gain,
        f_statistic: s.f_statistic,
        p_value: s.p_value,
    };
    let mut stepwise = Vec::new();
    for dependent in targets {
        let trace = stepwise_forward_with(&r, dependent, &options)?;
        stepwise.push(ReportedTrace {
            dependent: name(dependent),
            steps: trace.steps.iter().map(step).collect(),
            trajectory: trace.trajectory.iter().map(step).collect(),
            stopped_reason: trace.stopped_reason,
        });
    }

    let mut partials = Vec::new();
    for q in &config.partials {
        let i = resolve(&r, &q.i)?;
        let j = resolve(&r, &q.j)?;
        let conditioning = q.conditioning.iter().map(|k| resolve(&r, k)).collect::<Result<Vec<_>>>()?;
        let p = partial_correlation(&r, i, j, &conditioning).map_err(|e| match e {
            Error::InvalidArgument(msg) => Error::InvalidConfig(format!("partial correlation `{q}`: {msg}")),
            other => other,
        })?;
        partials.push(ReportedPartial {
            i: name(i),
            j: name(j),
            conditioning: conditioning.iter().map(|&c| name(c)).collect(),
            value: p.value,
        });
    }

    let condition_indices = eigen.condition_indices();
    Ok(DiagnosticsReport {
        schema_version: SCHEMA_VERSION,
        names: names.clone(),
        correlation: r.matrix().to_rows(),
        eigen: EigenSection {
            eigenvalues: eigen.eigenvalues().to_vec(),
            flagged: (0..r.dim()).filter(|&j| condition_indices[j] >= t.condition_index).collect(),
            condition_indices,
            vectors: (0..r.dim()).map(|j| eigen.eigenvector(j)).collect(),
        },
        vdp: table.proportions.to_rows(),
        cosmax: CosMaxSection {
            matrix: a.to_rows(),
            flagged,
            psi,
            surrogate_orthonormality_error,
        },
        sets,
        link_graph: ReportedGraph {
            nodes: found.graph.nodes.iter().map(|&i| name(i)).collect(),
            edges: found.graph.edges.iter().map(|&(i, j)| (name(i), name(j))).collect(),
        },
        families: found
            .families()
            .into_iter()
            .map(|f| f.into_iter().map(name).collect())
            .collect(),
        stepwise,
        partials,
        borderline,
        vifs,
        config,
    })
}
