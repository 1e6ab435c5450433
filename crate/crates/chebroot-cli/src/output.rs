//! Text and JSON rendering. JSON is canonical: fixed field order (struct
//! declaration order), shortest-round-trip floats, so parse → re-serialize
//! is byte-identical.

use serde::{Deserialize, Serialize};

use chebroot::sturm::multiplicity_at;
use chebroot::{ClassificationReport, Poly, QuarticReport};

pub fn render_quintic(report: &ClassificationReport, json: bool, verbose: bool) -> String {
    if json {
        return serde_json::to_string(report).expect("report serializes");
    }
    let mut s = String::new();
    push_counts(
        &mut s,
        report.n_real,
        report.n_int,
        report.n_ext_plus,
        report.n_ext_minus,
    );
    s.push_str(&format!("method: {:?}\n", report.method));
    if let Some(sc) = &report.scenario {
        s.push_str(&format!("scenario: {sc}\n"));
    }
    if let Some(info) = &report.reduction {
        s.push_str(&format!(
            "reduction: u = {}, shift = {}, alpha = {}, beta = {}, gamma = {}\n",
            info.u, info.shift, info.alpha, info.beta, info.gamma
        ));
    }
    if let (Some(f0), Some(fpi)) = (report.f0, report.fpi) {
        s.push_str(&format!("f(0) = {f0}, f(pi) = {fpi}\n"));
    }
    push_roots(&mut s, &report.roots);
    push_flags(&mut s, &report.degenerate);
    if verbose {
        if let Some(info) = &report.reduction {
            if !report.interior_thetas.is_empty() {
                let thetas: Vec<String> = report
                    .interior_thetas
                    .iter()
                    .map(|t| t.to_string())
                    .collect();
                s.push_str(&format!("interior thetas: {}\n", thetas.join(", ")));
                let ts: Vec<String> = report
                    .interior_thetas
                    .iter()
                    .map(|&th| (info.u * th.cos()).to_string())
                    .collect();
                s.push_str(&format!("interior t-roots: {}\n", ts.join(", ")));
            }
            if !report.interior_brackets.is_empty() {
                let bs: Vec<String> = report
                    .interior_brackets
                    .iter()
                    .map(|(lo, hi)| format!("({lo}, {hi})"))
                    .collect();
                s.push_str(&format!("sign-change brackets: {}\n", bs.join(", ")));
            }
        }
        let pairs = (5 - report.n_real.min(5)) / 2;
        s.push_str(&format!(
            "complex roots: {} ({} conjugate pair{})\n",
            5 - report.n_real.min(5),
            pairs,
            if pairs == 1 { "" } else { "s" }
        ));
    }
    s.pop();
    s
}

pub fn render_quartic(report: &QuarticReport, shift: f64, json: bool, verbose: bool) -> String {
    if json {
        return serde_json::to_string(report).expect("report serializes");
    }
    let mut s = String::new();
    push_counts(
        &mut s,
        report.n_real,
        report.n_int,
        report.n_ext_plus,
        report.n_ext_minus,
    );
    s.push_str(&format!("method: {:?}\n", report.method));
    if let Some((u, a, b)) = report.reduction {
        s.push_str(&format!(
            "reduction: u = {u}, shift = {shift}, a = {a}, b = {b}\n"
        ));
    }
    if let (Some(f0), Some(fpi)) = (report.f0, report.fpi) {
        s.push_str(&format!("f(0) = {f0}, f(pi) = {fpi}\n"));
    }
    push_roots(&mut s, &report.roots);
    push_flags(&mut s, &report.degenerate);
    if verbose {
        s.push_str(&format!(
            "complex roots: {}\n",
            4usize.saturating_sub(report.n_real)
        ));
    }
    s.pop();
    s
}

/// Oracle output: distinct real roots with multiplicities.
#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct OracleReport {
    pub degree: usize,
    pub n_distinct: usize,
    pub roots: Vec<f64>,
    pub multiplicities: Vec<u32>,
    pub square_free: bool,
}

pub fn render_oracle(p: &Poly, roots: &[f64], json: bool) -> String {
    let report = OracleReport {
        degree: p.degree(),
        n_distinct: roots.len(),
        roots: roots.to_vec(),
        multiplicities: roots.iter().map(|&r| multiplicity_at(p, r)).collect(),
        square_free: !chebroot::sturm::has_multiple_root(p),
    };
    if json {
        return serde_json::to_string(&report).expect("report serializes");
    }
    let mut s = format!(
        "distinct real roots: {} (degree {})\n",
        report.n_distinct, report.degree
    );
    if report.roots.is_empty() {
        s.push_str("roots: (none)\n");
    } else {
        let rendered: Vec<String> = report
            .roots
            .iter()
            .zip(&report.multiplicities)
            .map(|(r, m)| {
                if *m > 1 {
                    format!("{r} (multiplicity {m})")
                } else {
                    r.to_string()
                }
            })
            .collect();
        s.push_str(&format!("roots: {}\n", rendered.join(", ")));
    }
    if !report.square_free {
        s.push_str("note: polynomial is not square-free\n");
    }
    s.pop();
    s
}

fn push_counts(s: &mut String, n_real: usize, n_int: usize, plus: usize, minus: usize) {
    s.push_str(&format!(
        "n_real: {n_real}  (n_int = {n_int}, n_ext+ = {plus}, n_ext- = {minus})\n"
    ));
}

fn push_roots(s: &mut String, roots: &[f64]) {
    if roots.is_empty() {
        s.push_str("roots: (none)\n");
    } else {
        let rendered: Vec<String> = roots.iter().map(|r| r.to_string()).collect();
        s.push_str(&format!("roots: {}\n", rendered.join(", ")));
    }
}

fn push_flags(s: &mut String, flags: &[chebroot::DegeneracyFlag]) {
    if flags.is_empty() {
        s.push_str("flags: (none)\n");
    } else {
        let rendered: Vec<String> = flags.iter().map(|f| format!("{f:?}")).collect();
        s.push_str(&format!("flags: {}\n", rendered.join(", ")));
    }
}
