//! Assembles interior and exterior counts into the final classification
//! N_real ∈ {1, 3, 5}, with every answer certified against the Sturm oracle.
//!
//! The decision procedure: depress, reduce (or fall back when the cosine
//! substitution does not exist), locate the critical points of f, count
//! strict sign changes of f over {0} ∪ criticals ∪ {π} for the interior
//! count, read the boundary signs for the exterior indicators, certify the
//! exterior count by Sturm windows either way, and refine roots from the
//! sign-change brackets.

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::config::Config;
use crate::critical::{solve_critical, CriticalSet};
use crate::error::{Error, Result};
use crate::poly::{depress_with, DepressedQuintic, MonicQuintic, Poly};
use crate::sturm;
use crate::trig::{reduce, TrigReduction};

/// How the final counts were obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Method {
    /// The cosine-substitution analysis produced the counts (exterior side
    /// certified by the oracle as always).
    TrigMethod,
    /// The Sturm oracle produced the counts: m ≥ 0, tiny u, or a degeneracy
    /// the sign-change counting cannot see.
    OracleFallback,
}

/// Degenerate geometry observed during classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DegeneracyFlag {
    /// f vanishes (to tolerance) at an interior evaluation node: a tangency,
    /// i.e. a multiple root of the quintic. Also set when the oracle's
    /// square-free test detects a multiple root.
    TangentZero,
    /// f vanishes at θ = 0 or π: a root at t = ±u exactly. Counted once, as
    /// interior.
    BoundaryRoot,
    /// The certified exterior count disagrees with the generic boundary-sign
    /// indicator (more than one root on a half-line).
    NonGenericExterior,
    /// 0 < u < u_min: the trigonometric parameters are ill-conditioned.
    SmallU,
    /// m ≥ 0: the substitution does not exist.
    MethodNotApplicable,
}

/// Scale, shift and parameters of the reduction behind a report.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ReductionInfo {
    pub u: f64,
    pub shift: f64,
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

/// Exterior root counts on the two half-lines (u, ∞) and (−∞, −u).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExteriorCount {
    pub plus: usize,
    pub minus: usize,
    /// True when the counts were confirmed by Sturm windows rather than read
    /// off the boundary-sign indicators alone.
    pub certified: bool,
}

/// The full classification of a monic quintic.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassificationReport {
    /// Zeros of f in [0, π] — equivalently roots of the depressed quintic in
    /// [−u, u]. Oracle-fallback reports count t-roots with |t| ≤ u (u = 0
    /// when no substitution exists).
    pub n_int: usize,
    /// Roots in (u, ∞).
    pub n_ext_plus: usize,
    /// Roots in (−∞, −u).
    pub n_ext_minus: usize,
    /// Distinct real roots: n_int + n_ext_plus + n_ext_minus. Odd (1, 3 or
    /// 5) except when a flagged multiple-root case reports the oracle's
    /// distinct count verbatim.
    pub n_real: usize,
    /// f(0) = α + β + 1 + γ; absent on oracle-fallback reports.
    pub f0: Option<f64>,
    /// f(π) = α − β − 1 + γ; absent on oracle-fallback reports.
    pub fpi: Option<f64>,
    /// Sign-change intervals (θ_lo, θ_hi) bracketing the interior zeros.
    pub interior_brackets: Vec<(f64, f64)>,
    /// Refined real roots of the original quintic, ascending (z-domain; the
    /// depression shift has been undone).
    pub roots: Vec<f64>,
    /// Degeneracies observed; empty for clean generic classifications.
    pub degenerate: Vec<DegeneracyFlag>,
    pub method: Method,
    /// Which classification-theorem scenario matched, e.g. "Thm2(b)";
    /// non-generic count patterns get the nearest label, oracle-fallback
    /// reports none.
    pub scenario: Option<String>,
    /// Reduction parameters; absent when no reduction exists (m ≥ 0).
    pub reduction: Option<ReductionInfo>,
    /// Refined θ-zeros of f matching the interior roots, ascending.
    pub interior_thetas: Vec<f64>,
}

/// Result of evaluating f at the interior nodes {0} ∪ criticals ∪ {π}.
#[derive(Debug, Clone)]
pub struct InteriorCount {
    /// Strict sign changes between consecutive nodes.
    pub n_int: usize,
    /// One (θ_lo, θ_hi) bracket per sign change.
    pub brackets: Vec<(f64, f64)>,
    /// |f| ≤ eps_tangent at some interior node.
    pub tangency: bool,
    /// |f| ≤ eps_tangent at θ = 0 or π.
    pub boundary_zero: bool,
}

/// Evaluates f at {0} ∪ critical θ ∪ {π} and counts strict sign changes.
/// Each change yields one bracket; node values inside the tangency
/// threshold are reported on the flags instead of being counted.
pub fn count_interior(r: &TrigReduction, crit: &CriticalSet) -> InteriorCount {
    count_interior_with(r, crit, &Config::default())
}

pub fn count_interior_with(r: &TrigReduction, crit: &CriticalSet, cfg: &Config) -> InteriorCount {
    let eps = cfg.eps_tangent_for(r.alpha, r.beta, r.gamma);
    let mut nodes = Vec::with_capacity(crit.thetas.len() + 2);
    nodes.push(0.0);
    nodes.extend_from_slice(&crit.thetas);
    nodes.push(PI);
    let values: Vec<f64> = nodes.iter().map(|&th| r.eval_f(th)).collect();

    let mut tangency = false;
    let mut boundary_zero = false;
    for (i, &v) in values.iter().enumerate() {
        if v.abs() <= eps {
            if i == 0 || i == values.len() - 1 {
                boundary_zero = true;
            } else {
                tangency = true;
            }
        }
    }

    let mut n_int = 0;
    let mut brackets = Vec::new();
    for i in 1..nodes.len() {
        if values[i - 1] != 0.0 && values[i] != 0.0 && (values[i - 1] < 0.0) != (values[i] < 0.0) {
            n_int += 1;
            brackets.push((nodes[i - 1], nodes[i]));
        }
    }
    InteriorCount {
        n_int,
        brackets,
        tangency,
        boundary_zero,
    }
}

/// Generic exterior indicators (f(0) < 0 for the right half-line, f(π) > 0
/// for the left) certified unconditionally by Sturm counting on (u, B] and
/// [−B, −u). Returns the certified count and whether it disagreed with the
/// indicators.
pub fn count_exterior(
    dq: &DepressedQuintic,
    r: &TrigReduction,
    f0: f64,
    fpi: f64,
) -> (ExteriorCount, bool) {
    let indicator_plus = usize::from(f0 < 0.0);
    let indicator_minus = usize::from(fpi > 0.0);
    let p = dq.to_poly();
    let (plus, minus) = exterior_windows(&p, r.u);
    // Positivity of P''' beyond ±u caps each half-line at three roots.
    debug_assert!(plus <= 3 && minus <= 3);
    let count = ExteriorCount {
        plus,
        minus,
        certified: true,
    };
    let non_generic = plus != indicator_plus || minus != indicator_minus;
    (count, non_generic)
}

/// Certified counts of distinct roots of `p` in (u, ∞) and (−∞, −u).
fn exterior_windows(p: &Poly, u: f64) -> (usize, usize) {
    let b = sturm::cauchy_bound(p).unwrap_or(u) + 1.0;
    if u >= b {
        return (0, 0);
    }
    let plus = sturm::count_distinct_in_window(p, u, b);
    let minus = sturm::count_distinct_in_window(p, -b, -u);
    (plus, minus)
}

/// Refines one interior zero of f by bisection on a strict sign-change
/// bracket, returning the corresponding t = u·cos(θ).
pub fn refine_interior_root(r: &TrigReduction, bracket: (f64, f64)) -> Result<f64> {
    Ok(r.u * refine_interior_theta(r, bracket)?.cos())
}

fn refine_interior_theta(r: &TrigReduction, (mut lo, mut hi): (f64, f64)) -> Result<f64> {
    let mut flo = r.eval_f(lo);
    let fhi = r.eval_f(hi);
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if (flo < 0.0) == (fhi < 0.0) {
        return Err(Error::NoSignChange { lo, hi });
    }
    while hi - lo > 1e-13 {
        let mid = 0.5 * (lo + hi);
        let fm = r.eval_f(mid);
        if fm == 0.0 {
            return Ok(mid);
        }
        if (fm < 0.0) == (flo < 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Classifies a monic quintic with default tolerances.
pub fn classify(q: &MonicQuintic) -> ClassificationReport {
    classify_with(q, &Config::default())
}

/// Classifies a monic quintic. Total: degenerate inputs are flagged and
/// resolved by the oracle, never rejected.
pub fn classify_with(q: &MonicQuintic, cfg: &Config) -> ClassificationReport {
    let dq = depress_with(q, cfg);
    if ![dq.m, dq.n, dq.p, dq.q].iter().all(|v| v.is_finite()) {
        // Coefficients near the f64 range edge can overflow the shift
        // expansion; classify the original polynomial directly instead.
        return oracle_classify_poly(
            &q.to_poly(),
            0.0,
            0.0,
            None,
            vec![DegeneracyFlag::MethodNotApplicable],
        );
    }
    let r = match reduce(&dq) {
        Err(_) => {
            return oracle_classify(&dq, 0.0, None, vec![DegeneracyFlag::MethodNotApplicable])
        }
        Ok(r) => r,
    };
    let info = ReductionInfo {
        u: r.u,
        shift: dq.shift,
        alpha: r.alpha,
        beta: r.beta,
        gamma: r.gamma,
    };
    if r.u < cfg.u_min {
        return oracle_classify(&dq, r.u, None, vec![DegeneracyFlag::SmallU]);
    }
    // Multiple roots (tangencies, wherever they sit) defeat sign-change
    // counting; detect them up front via gcd(P, P′) and let the oracle
    // report distinct counts.
    if sturm::has_multiple_root(&dq.to_poly()) {
        return oracle_classify(&dq, r.u, Some(info), vec![DegeneracyFlag::TangentZero]);
    }

    let crit = solve_critical(&r);
    let (f0, fpi) = r.boundary_values();
    let interior = count_interior_with(&r, &crit, cfg);

    if interior.tangency || interior.boundary_zero {
        let mut flags = Vec::new();
        if interior.tangency {
            flags.push(DegeneracyFlag::TangentZero);
        }
        if interior.boundary_zero {
            flags.push(DegeneracyFlag::BoundaryRoot);
        }
        return oracle_classify(&dq, r.u, Some(info), flags);
    }

    let (ext, non_generic) = count_exterior(&dq, &r, f0, fpi);
    let mut flags = Vec::new();
    if non_generic {
        flags.push(DegeneracyFlag::NonGenericExterior);
    }

    let n_real = interior.n_int + ext.plus + ext.minus;
    if n_real.is_multiple_of(2) {
        // Parity can only break through a multiple root the node values did
        // not reveal (an exterior tangency); hand the case to the oracle.
        flags.push(DegeneracyFlag::TangentZero);
        return oracle_classify(&dq, r.u, Some(info), flags);
    }

    // Refine roots: interior via f-bisection, exterior via Sturm isolation.
    let mut thetas = Vec::with_capacity(interior.n_int);
    let mut t_roots: Vec<f64> = Vec::with_capacity(n_real);
    for &bracket in &interior.brackets {
        // Brackets carry a strict sign change by construction.
        let theta = refine_interior_theta(&r, bracket).expect("sign-change bracket");
        thetas.push(theta);
        t_roots.push(r.u * theta.cos());
    }
    let p = dq.to_poly();
    if ext.plus + ext.minus > 0 {
        let b = sturm::cauchy_bound(&p).unwrap_or(r.u) + 1.0;
        let delta = 1e-12 * (1.0 + r.u);
        if ext.plus > 0 {
            t_roots.extend(sturm::isolate_and_refine(&p, r.u + delta, b));
        }
        if ext.minus > 0 {
            t_roots.extend(sturm::isolate_and_refine(&p, -b, -r.u - delta));
        }
    }
    t_roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let roots: Vec<f64> = t_roots.iter().map(|t| t - dq.shift).collect();

    ClassificationReport {
        n_int: interior.n_int,
        n_ext_plus: ext.plus,
        n_ext_minus: ext.minus,
        n_real,
        f0: Some(f0),
        fpi: Some(fpi),
        interior_brackets: interior.brackets,
        roots,
        degenerate: flags,
        method: Method::TrigMethod,
        scenario: Some(scenario_label(interior.n_int, ext.plus, ext.minus)),
        reduction: Some(info),
        interior_thetas: thetas,
    }
}

/// Oracle resolution: distinct-root counts and refined roots come from the
/// Sturm machinery; the interior/exterior split is taken at ±u (u = 0 when
/// no substitution exists).
fn oracle_classify(
    dq: &DepressedQuintic,
    u: f64,
    info: Option<ReductionInfo>,
    flags: Vec<DegeneracyFlag>,
) -> ClassificationReport {
    oracle_classify_poly(&dq.to_poly(), dq.shift, u, info, flags)
}

fn oracle_classify_poly(
    p: &Poly,
    shift: f64,
    u: f64,
    info: Option<ReductionInfo>,
    mut flags: Vec<DegeneracyFlag>,
) -> ClassificationReport {
    if sturm::has_multiple_root(p) && !flags.contains(&DegeneracyFlag::TangentZero) {
        flags.push(DegeneracyFlag::TangentZero);
    }
    let t_roots = sturm::real_roots(p).unwrap_or_default();
    let tol = 1e-9 * (1.0 + u);
    let n_ext_plus = t_roots.iter().filter(|&&t| t > u + tol).count();
    let n_ext_minus = t_roots.iter().filter(|&&t| t < -u - tol).count();
    let n_int = t_roots.len() - n_ext_plus - n_ext_minus;
    let scenario = info
        .is_some()
        .then(|| scenario_label(n_int, n_ext_plus, n_ext_minus));
    ClassificationReport {
        n_int,
        n_ext_plus,
        n_ext_minus,
        n_real: t_roots.len(),
        f0: None,
        fpi: None,
        interior_brackets: Vec::new(),
        roots: t_roots.iter().map(|t| t - shift).collect(),
        degenerate: flags,
        method: Method::OracleFallback,
        scenario,
        reduction: info,
        interior_thetas: Vec::new(),
    }
}

/// Maps counts onto the classification-theorem labels; non-generic
/// combinations get the nearest label by L1 distance on (n_int, n_ext).
fn scenario_label(n_int: usize, plus: usize, minus: usize) -> String {
    let n_ext = plus + minus;
    match n_int + n_ext {
        5 => "Thm1".to_owned(),
        3 => nearest(
            n_int,
            n_ext,
            &[(3, 0, "Thm2(a)"), (1, 2, "Thm2(b)"), (2, 1, "Thm2(c)")],
        ),
        1 if n_int == 1 => "Thm3(a)".to_owned(),
        1 if minus == 1 => "Thm3(b)".to_owned(),
        1 => "Thm3(c)".to_owned(),
        _ => nearest(
            n_int,
            n_ext,
            &[
                (5, 0, "Thm1"),
                (3, 0, "Thm2(a)"),
                (1, 2, "Thm2(b)"),
                (2, 1, "Thm2(c)"),
                (1, 0, "Thm3(a)"),
                (0, 1, "Thm3(b)"),
            ],
        ),
    }
}

fn nearest(n_int: usize, n_ext: usize, options: &[(usize, usize, &str)]) -> String {
    options
        .iter()
        .min_by_key(|(i, e, _)| n_int.abs_diff(*i) + n_ext.abs_diff(*e))
        .map(|(_, _, s)| (*s).to_owned())
        .unwrap()
}

/// Interior zero count straight from the parameters (α, β, γ), plus the
/// boundary values — the machinery behind parameter-space sweeps, where no
/// source quintic exists. Tangencies are counted per strict sign change.
pub fn interior_zero_count(alpha: f64, beta: f64, gamma: f64) -> (usize, f64, f64) {
    let r = TrigReduction::from_params(alpha, beta, gamma);
    let crit = solve_critical(&r);
    let (f0, fpi) = r.boundary_values();
    let interior = count_interior(&r, &crit);
    (interior.n_int, f0, fpi)
}
