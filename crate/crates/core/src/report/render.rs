use std::fmt::Write;

use super::model::{BorderlineNote, DiagnosticsReport, Quantity, ReportedSet};
use crate::auxiliary::StopReason;
use crate::diagnostics::{Method, BORDERLINE_FRACTION};
use crate::Scalar;

const WIDTH: usize = 9;

fn num<T: Scalar>(value: T) -> String {
    format!("{:.3}", value.as_f64())
}

fn cell(text: &str) -> String {
    format!("{text:>WIDTH$}")
}

fn header(out: &mut String, label_width: usize, first: &str, columns: &[String], extra: &[&str]) {
    let _ = write!(out, "{first:<label_width$}");
    for c in columns {
        out.push_str(&cell(c));
    }
    for e in extra {
        out.push_str(&cell(e));
    }
    out.push('\n');
}

fn label_width(names: &[String]) -> usize {
    names.iter().map(|n| n.chars().count()).max().unwrap_or(0).max(12) + 1
}

fn join(names: &[String]) -> String {
    format!("{{{}}}", names.join(", "))
}

/// Fixed-width tables laid out like the usual published diagnostics: the
/// correlation matrix with VIFs, eigenvectors with condition indices, the
/// VDP table and the cos-max matrix, followed by the sets each method found.
///
/// In the cos-max matrix, entries in anchor rows above the loading
/// threshold carry `*` and borderline entries carry `~`.
pub fn render_text<T: Scalar>(rep: &DiagnosticsReport<T>) -> String {
    let mut out = String::new();
    let names = &rep.names;
    let m = names.len();
    let lw = label_width(names);
    let t = &rep.config.thresholds;

    let _ = write!(out, "Collinearity diagnostics: {m} variables");
    if let Some(n) = rep.config.n_obs {
        let _ = write!(out, ", {n} observations");
    }
    out.push_str("\n\n");

    out.push_str("Correlation matrix and VIFs\n");
    header(&mut out, lw, "", names, &["VIF"]);
    for (i, row) in rep.correlation.iter().enumerate() {
        let _ = write!(out, "{:<lw$}", names[i]);
        for &v in row {
            out.push_str(&cell(&num(v)));
        }
        out.push_str(&cell(&num(rep.vifs[i])));
        out.push('\n');
    }
    out.push('\n');

    out.push_str("Eigenvectors, eigenvalues and condition indices\n");
    let directions: Vec<String> = (1..=m).map(|j| format!("v{j}")).collect();
    header(&mut out, lw, "", &directions, &[]);
    for i in 0..m {
        let _ = write!(out, "{:<lw$}", names[i]);
        for v in &rep.eigen.vectors {
            out.push_str(&cell(&num(v[i])));
        }
        out.push('\n');
    }
    let _ = write!(out, "{:<lw$}", "eigenvalue");
    for &l in &rep.eigen.eigenvalues {
        out.push_str(&cell(&num(l)));
    }
    let _ = write!(out, "\n{:<lw$}", "cond. index");
    for &c in &rep.eigen.condition_indices {
        out.push_str(&cell(&num(c)));
    }
    out.push_str("\n\n");

    out.push_str("Variance-decomposition proportions\n");
    let mut columns = vec!["cond.".to_string()];
    columns.extend(names.iter().cloned());
    header(&mut out, lw, "eigenvalue", &columns, &[]);
    for (j, row) in rep.vdp.iter().enumerate() {
        let _ = write!(out, "{:<lw$}", num(rep.eigen.eigenvalues[j]));
        out.push_str(&cell(&num(rep.eigen.condition_indices[j])));
        for &p in row {
            out.push_str(&cell(&num(p)));
        }
        out.push('\n');
    }
    out.push('\n');

    out.push_str("Cos-max transformation matrix and VIFs\n");
    header(&mut out, lw, "", names, &["VIF"]);
    let low = t.loading * T::of(1.0 - BORDERLINE_FRACTION);
    for (i, row) in rep.cosmax.matrix.iter().enumerate() {
        let anchor = rep.vifs[i] > t.vif;
        let _ = write!(out, "{:<lw$}", format!("a{}", i + 1));
        for &v in row {
            let mark = match anchor {
                true if v.abs() > t.loading => "*",
                true if v.abs() >= low => "~",
                _ => " ",
            };
            out.push_str(&cell(&format!("{}{mark}", num(v))));
        }
        out.push_str(&cell(&format!("{} ", num(rep.vifs[i]))));
        out.push('\n');
    }
    let _ = writeln!(
        out,
        "* |a| > {} in rows with VIF > {}; ~ borderline",
        num(t.loading),
        num(t.vif)
    );
    out.push('\n');

    out.push_str("Collinear sets\n");
    if rep.is_clean() {
        out.push_str("no collinearities detected\n");
    }
    for method in [Method::Cosmax, Method::Eigenvector, Method::Vdp] {
        for s in rep.sets_for(method) {
            out.push_str(&describe_set(s));
            out.push('\n');
        }
    }
    out.push('\n');

    if !rep.link_graph.edges.is_empty() {
        out.push_str("Cos-max links\n");
        for (a, b) in &rep.link_graph.edges {
            let _ = writeln!(out, "  {a} - {b}");
        }
        let families: Vec<String> = rep.families.iter().map(|f| join(f)).collect();
        let _ = writeln!(out, "families: {}", families.join(" "));
        out.push('\n');
    }

    for trace in &rep.stepwise {
        let _ = writeln!(out, "Stepwise regression of {}", trace.dependent);
        let _ = writeln!(
            out,
            "  {:<lw$}{}{}{}{}",
            "entered",
            cell("R2"),
            cell("gain"),
            cell("F"),
            cell("p")
        );
        for (k, s) in trace.trajectory.iter().enumerate() {
            let accepted = k < trace.steps.len();
            let f = s.f_statistic.map_or("-".to_string(), num);
            let p = s.p_value.map_or("-".to_string(), |p| format!("{:.4}", p.as_f64()));
            let _ = writeln!(
                out,
                "{} {:<lw$}{}{}{}{}",
                if accepted { " " } else { "(" },
                s.variable,
                cell(&num(s.r_squared)),
                cell(&num(s.gain)),
                cell(&f),
                cell(&p),
            );
        }
        let reason = match trace.stopped_reason {
            StopReason::GainBelowMin => "gain below minimum",
            StopReason::PAboveAlpha => "p-value above alpha",
            StopReason::MaxSteps => "step limit reached",
            StopReason::AllEntered => "all variables entered",
        };
        let _ = writeln!(out, "  stopped: {reason}; bracketed rows were not accepted");
        out.push('\n');
    }

    if !rep.partials.is_empty() {
        out.push_str("Partial correlations\n");
        for p in &rep.partials {
            let given = if p.conditioning.is_empty() {
                String::new()
            } else {
                format!(" | {}", p.conditioning.join(", "))
            };
            let _ = writeln!(out, "  r({}, {}{given}) = {}", p.i, p.j, num(p.value));
        }
        out.push('\n');
    }

    if !rep.borderline.is_empty() {
        out.push_str("Borderline values\n");
        for b in &rep.borderline {
            out.push_str(&describe_borderline(b));
            out.push('\n');
        }
        out.push('\n');
    }

    while out.ends_with("\n\n") {
        out.pop();
    }
    out
}

fn describe_set<T: Scalar>(s: &ReportedSet<T>) -> String {
    let anchors: Vec<String> = s
        .anchors
        .iter()
        .map(|a| match s.method {
            Method::Cosmax => format!("{} (VIF {})", a.name, num(a.score)),
            _ => format!("{} (cond. index {})", a.name, num(a.score)),
        })
        .collect();
    let mut line = format!("  {:<12}{}  from {}", s.method.label(), join(&s.members), anchors.join(", "));
    if s.pooled {
        line.push_str("  [pooled involvement]");
    }
    if s.degenerate {
        line.push_str("  [warning: fewer than two members]");
    }
    line
}

fn describe_borderline<T: Scalar>(b: &BorderlineNote<T>) -> String {
    let what = match b.quantity {
        Quantity::Vif => "VIF",
        Quantity::CosmaxLoading => "cos-max loading",
        Quantity::EigenvectorLoading => "eigenvector loading",
        Quantity::Vdp => "VDP",
    };
    if b.quantity == Quantity::Vif {
        format!("  {what} of {} = {} (threshold {})", b.variable, num(b.value), num(b.threshold))
    } else {
        format!(
            "  {what} of {} in {} = {} (threshold {})",
            b.variable,
            b.source,
            num(b.value),
            num(b.threshold)
        )
    }
}

/// Pretty-printed JSON with fields in declaration order and floats written
/// to round-trip exactly.
pub fn render_structured<T: Scalar>(rep: &DiagnosticsReport<T>) -> String {
    let mut text = serde_json::to_string_pretty(rep).expect("report values are finite");
    text.push('\n');
    text
}

/// Reads a document produced by [`render_structured`].
pub fn parse_structured<T: Scalar>(text: &str) -> serde_json::Result<DiagnosticsReport<T>> {
    serde_json::from_str(text)
}
