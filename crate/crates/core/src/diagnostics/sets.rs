use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{CosMaxTransform, VdpTable};
use crate::linalg::EigenSystem;
use crate::Scalar;

/// Values this far below a threshold (as a fraction of it) are annotated as
/// borderline. Annotation only; membership is decided by the threshold.
pub const BORDERLINE_FRACTION: f64 = 0.25;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Cosmax,
    Eigenvector,
    Vdp,
}

impl Method {
    pub fn label(self) -> &'static str {
        match self {
            Method::Cosmax => "cos-max",
            Method::Eigenvector => "eigenvector",
            Method::Vdp => "vdp",
        }
    }
}

/// What identified a set. For cos-max this is a variable and its VIF; for the
/// eigen-based methods it is an eigen-direction and its condition index.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Anchor<T> {
    pub index: usize,
    pub score: T,
}

/// A value that fell just short of the membership threshold.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Borderline<T> {
    /// Position of the anchor (in `anchors`) whose evidence row holds the value.
    pub anchor: usize,
    pub variable: usize,
    pub value: T,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CollinearSet<T> {
    pub method: Method,
    pub anchors: Vec<Anchor<T>>,
    /// Sorted variable indices.
    pub members: Vec<usize>,
    /// The row of values inspected for each anchor, in anchor order.
    pub evidence: Vec<Vec<T>>,
    pub borderline: Vec<Borderline<T>>,
    /// Fewer than two members: a direction was flagged but no set emerged.
    pub degenerate: bool,
    /// Built by summing VDP rows of competing condition indices; read it as
    /// the variables involved in some collinearity, not as one dependency.
    pub pooled: bool,
}

impl<T: Scalar> CollinearSet<T> {
    pub fn contains(&self, variable: usize) -> bool {
        self.members.binary_search(&variable).is_ok()
    }

    pub fn anchor_indices(&self) -> Vec<usize> {
        self.anchors.iter().map(|a| a.index).collect()
    }
}

/// Pairs of variables linked by a large cos-max loading.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct LinkGraph {
    pub nodes: Vec<usize>,
    /// Each edge is stored once as `(low, high)`, sorted.
    pub edges: Vec<(usize, usize)>,
}

impl LinkGraph {
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        let key = (i.min(j), i.max(j));
        self.edges.binary_search(&key).is_ok()
    }

    pub fn neighbours(&self, i: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| match (a == i, b == i) {
                (true, _) => Some(b),
                (_, true) => Some(a),
                _ => None,
            })
            .collect()
    }

    /// Connected components with at least one edge, each sorted, ordered by
    /// their smallest node.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &start in &self.nodes {
            if seen.contains(&start) {
                continue;
            }
            let mut component = BTreeSet::new();
            let mut stack = vec![start];
            while let Some(node) = stack.pop() {
                if component.insert(node) {
                    stack.extend(self.neighbours(node));
                }
            }
            seen.extend(component.iter().copied());
            if component.len() > 1 {
                out.push(component.into_iter().collect());
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CosMaxIdentification<T> {
    pub sets: Vec<CollinearSet<T>>,
    pub graph: LinkGraph,
}

impl<T: Scalar> CosMaxIdentification<T> {
    /// Collinearity families: connected groups in the link graph.
    pub fn families(&self) -> Vec<Vec<usize>> {
        self.graph.components()
    }
}

fn borderline_band<T: Scalar>(threshold: T) -> T {
    threshold * T::of(1.0 - BORDERLINE_FRACTION)
}

fn members_and_borderline<T: Scalar>(
    row: &[T],
    threshold: T,
    anchor: usize,
    always: Option<usize>,
) -> (Vec<usize>, Vec<Borderline<T>>) {
    let low = borderline_band(threshold);
    let mut members = Vec::new();
    let mut borderline = Vec::new();
    for (i, &value) in row.iter().enumerate() {
        let size = value.abs();
        if size > threshold || always == Some(i) {
            members.push(i);
        } else if size >= low {
            borderline.push(Borderline {
                anchor,
                variable: i,
                value,
            });
        }
    }
    (members, borderline)
}

/// For every variable with VIF above `vif_threshold`, the variables whose
/// loading in its column of A exceeds `loading_threshold` in magnitude.
/// Identical sets from different anchors are merged.
pub fn identify_cosmax_sets<T: Scalar>(
    t: &CosMaxTransform<T>,
    vif_threshold: T,
    loading_threshold: T,
) -> CosMaxIdentification<T> {
    let mut sets: Vec<CollinearSet<T>> = Vec::new();
    let mut nodes = BTreeSet::new();
    let mut edges = BTreeSet::new();
    for (i, &vif) in t.vifs().iter().enumerate() {
        if !(vif > vif_threshold) {
            continue;
        }
        nodes.insert(i);
        let column = t.column(i);
        let (members, borderline) = members_and_borderline(&column, loading_threshold, 0, Some(i));
        for &j in members.iter().filter(|&&j| j != i) {
            nodes.insert(j);
            edges.insert((i.min(j), i.max(j)));
        }
        let anchor = Anchor { index: i, score: vif };
        if let Some(existing) = sets.iter_mut().find(|s| s.members == members) {
            let position = existing.anchors.len();
            existing.anchors.push(anchor);
            existing.evidence.push(column);
            existing
                .borderline
                .extend(borderline.into_iter().map(|b| Borderline { anchor: position, ..b }));
        } else {
            sets.push(CollinearSet {
                method: Method::Cosmax,
                anchors: vec![anchor],
                degenerate: members.len() < 2,
                members,
                evidence: vec![column],
                borderline,
                pooled: false,
            });
        }
    }
    CosMaxIdentification {
        sets,
        graph: LinkGraph {
            nodes: nodes.into_iter().collect(),
            edges: edges.into_iter().collect(),
        },
    }
}

/// For every eigenvector whose condition index reaches `cond_threshold`, the
/// variables with loadings above `loading_cutoff` in magnitude.
pub fn identify_eigen_sets<T: Scalar>(
    e: &EigenSystem<T>,
    cond_threshold: T,
    loading_cutoff: T,
) -> Vec<CollinearSet<T>> {
    let indices = e.condition_indices();
    (0..e.dim())
        .filter(|&j| indices[j] >= cond_threshold)
        .map(|j| {
            let v = e.eigenvector(j);
            let (members, borderline) = members_and_borderline(&v, loading_cutoff, 0, None);
            CollinearSet {
                method: Method::Eigenvector,
                anchors: vec![Anchor {
                    index: j,
                    score: indices[j],
                }],
                degenerate: members.len() < 2,
                members,
                evidence: vec![v],
                borderline,
                pooled: false,
            }
        })
        .collect()
}

/// For every eigen-direction whose condition index reaches `cond_threshold`,
/// the variables with a variance-decomposition proportion above
/// `pi_threshold`.
///
/// With `aggregate_competing`, qualifying directions whose condition indices
/// lie within `pool_window` (relative) of a neighbour are pooled by summing
/// their proportions before thresholding.
pub fn identify_vdp_sets<T: Scalar>(
    v: &VdpTable<T>,
    cond_threshold: T,
    pi_threshold: T,
    aggregate_competing: bool,
    pool_window: T,
) -> Vec<CollinearSet<T>> {
    let mut qualifying: Vec<usize> = (0..v.dim())
        .filter(|&j| v.condition_indices[j] >= cond_threshold)
        .collect();
    qualifying.sort_by(|&a, &b| v.condition_indices[a].partial_cmp(&v.condition_indices[b]).unwrap());

    let mut groups: Vec<Vec<usize>> = Vec::new();
    for j in qualifying {
        let joins = aggregate_competing
            && groups.last().is_some_and(|g| {
                let previous = v.condition_indices[*g.last().unwrap()];
                v.condition_indices[j] <= previous * (T::one() + pool_window)
            });
        match groups.last_mut() {
            Some(group) if joins => group.push(j),
            _ => groups.push(vec![j]),
        }
    }

    groups
        .into_iter()
        .map(|group| {
            let m = v.dim();
            let pooled = group.len() > 1;
            let mut combined = vec![T::zero(); m];
            for &j in &group {
                for (c, &p) in combined.iter_mut().zip(v.row(j)) {
                    *c = *c + p;
                }
            }
            let (members, borderline) = members_and_borderline(&combined, pi_threshold, 0, None);
            let evidence = if pooled {
                vec![combined]
            } else {
                vec![v.row(group[0]).to_vec()]
            };
            CollinearSet {
                method: Method::Vdp,
                anchors: group
                    .iter()
                    .map(|&j| Anchor {
                        index: j,
                        score: v.condition_indices[j],
                    })
                    .collect(),
                degenerate: members.len() < 2,
                members,
                evidence,
                borderline,
                pooled,
            }
        })
        .collect()
}
