//! The same reduction one degree down: a depressed quartic
//! t⁴ + mt² + pt + q with m < 0 maps under t = u·cosθ, u = sqrt(−m), onto
//!
//! ```text
//! f₄(θ) = a·cosθ + cos4θ + b,     a = 8p/u³,  b = 8q/u⁴ − 1
//! ```
//!
//! via the quadruple-angle identity 8cos⁴θ − 8cos²θ + 1 = cos4θ, with
//! f₄(θ) = (8/u⁴)·P₄(u·cosθ) identically. Zeros of f₄ on [0, π] are the
//! roots of P₄ in [−u, u]; both tails go to +∞, so a root beyond ±u exists
//! iff P₄(±u) < 0. The classification lands in {0, 2, 4} real roots.

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::classify::{DegeneracyFlag, Method};
use crate::config::Config;
use crate::error::{MethodNotApplicable, Result};
use crate::poly::Poly;
use crate::sturm;

/// Scale and parameters of the quartic cosine substitution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuarticReduction {
    /// u = sqrt(−m) > 0.
    pub u: f64,
    /// a = 8p/u³.
    pub a: f64,
    /// b = 8q/u⁴ − 1.
    pub b: f64,
    /// Source coefficients (m, p, q).
    pub source: (f64, f64, f64),
}

/// Depressed quartic plus the shift that produced it (t = z + a3/4).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DepressedQuartic {
    pub m: f64,
    pub p: f64,
    pub q: f64,
    pub shift: f64,
}

/// Classification of a depressed quartic; mirrors the quintic report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuarticReport {
    /// Roots in [−u, u] (zeros of f₄ on [0, π]).
    pub n_int: usize,
    pub n_ext_plus: usize,
    pub n_ext_minus: usize,
    /// Distinct real roots: 0, 2 or 4 except in flagged multiple-root cases.
    pub n_real: usize,
    /// f₄(0) = a + 1 + b; absent on oracle-fallback reports.
    pub f0: Option<f64>,
    /// f₄(π) = −a + 1 + b; absent on oracle-fallback reports.
    pub fpi: Option<f64>,
    /// Refined real roots, ascending, in the classified (depressed) variable.
    pub roots: Vec<f64>,
    pub degenerate: Vec<DegeneracyFlag>,
    pub method: Method,
    /// (u, a, b) of the reduction; absent when m ≥ 0.
    pub reduction: Option<(f64, f64, f64)>,
}

impl QuarticReduction {
    /// f₄(θ) = a·cosθ + cos4θ + b.
    pub fn eval_f(&self, theta: f64) -> f64 {
        self.a * theta.cos() + (4.0 * theta).cos() + self.b
    }

    /// (f₄(0), f₄(π)) = (a + 1 + b, −a + 1 + b).
    pub fn boundary_values(&self) -> (f64, f64) {
        (self.a + 1.0 + self.b, -self.a + 1.0 + self.b)
    }
}

/// Reduces a depressed quartic with m < 0 to (u, a, b). Errors when the
/// substitution does not exist (m ≥ 0) or its scale powers overflow f64.
pub fn reduce_quartic(m: f64, p: f64, q: f64) -> Result<QuarticReduction> {
    if !m.is_finite() || m >= 0.0 {
        return Err(MethodNotApplicable { m }.into());
    }
    let u = (-m).sqrt();
    let u2 = -m; // u² exactly, avoiding the sqrt round trip
    let u3 = u2 * u;
    let u4 = u2 * u2;
    let r = QuarticReduction {
        u,
        a: 8.0 * p / u3,
        b: 8.0 * q / u4 - 1.0,
        source: (m, p, q),
    };
    if ![r.u, r.a, r.b].iter().all(|v| v.is_finite()) {
        return Err(MethodNotApplicable { m }.into());
    }
    Ok(r)
}

/// Removes the cubic term of a monic quartic z⁴ + a3z³ + a2z² + a1z + a0 by
/// the shift t = z + a3/4 (so roots map back as z = t − shift).
pub fn depress_quartic(a3: f64, a2: f64, a1: f64, a0: f64) -> DepressedQuartic {
    let shift = a3 / 4.0;
    let poly = Poly::new(vec![a0, a1, a2, a3, 1.0]).shifted(-shift);
    let c = poly.coeffs();
    let scale = 1.0 + [a3, a2, a1, a0].iter().fold(0.0_f64, |m, v| m.max(v.abs()));
    let snap = |v: f64| if v.abs() <= 1e-12 * scale { 0.0 } else { v };
    debug_assert!(c[3].abs() <= 1e-12 * scale);
    DepressedQuartic {
        m: snap(c[2]),
        p: snap(c[1]),
        q: snap(c[0]),
        shift,
    }
}

fn quartic_poly(m: f64, p: f64, q: f64) -> Poly {
    Poly::new(vec![q, p, m, 0.0, 1.0])
}

/// Classifies the depressed quartic t⁴ + mt² + pt + q into 0, 2 or 4 real
/// roots, certified by the Sturm oracle; m ≥ 0 routes to the oracle.
pub fn classify_quartic(m: f64, p: f64, q: f64) -> QuarticReport {
    classify_quartic_with(m, p, q, &Config::default())
}

pub fn classify_quartic_with(m: f64, p: f64, q: f64, cfg: &Config) -> QuarticReport {
    if ![m, p, q].iter().all(|v| v.is_finite()) {
        return QuarticReport {
            n_int: 0,
            n_ext_plus: 0,
            n_ext_minus: 0,
            n_real: 0,
            f0: None,
            fpi: None,
            roots: Vec::new(),
            degenerate: vec![DegeneracyFlag::MethodNotApplicable],
            method: Method::OracleFallback,
            reduction: None,
        };
    }
    let r = match reduce_quartic(m, p, q) {
        Err(_) => {
            return quartic_oracle(
                m,
                p,
                q,
                0.0,
                None,
                vec![DegeneracyFlag::MethodNotApplicable],
            )
        }
        Ok(r) => r,
    };
    if r.u < cfg.u_min {
        return quartic_oracle(m, p, q, r.u, None, vec![DegeneracyFlag::SmallU]);
    }
    let info = Some((r.u, r.a, r.b));
    if sturm::has_multiple_root(&quartic_poly(m, p, q)) {
        return quartic_oracle(m, p, q, r.u, info, vec![DegeneracyFlag::TangentZero]);
    }

    // Interior critical points: f₄′(θ) = −sinθ·(a + 4·U3(cosθ)), so the
    // critical equation in x = cosθ is the cubic 32x³ − 16x + a = 0.
    let g = Poly::new(vec![r.a, -16.0, 0.0, 32.0]);
    let mut nodes = vec![0.0];
    nodes.extend(
        sturm::isolate_and_refine(&g, -1.0, 1.0)
            .into_iter()
            .rev()
            .filter(|x| x.abs() < 1.0 - 1e-10)
            .map(|x| x.acos()),
    );
    nodes.push(PI);

    let eps = cfg
        .eps_tangent
        .unwrap_or(1e-9 * (1.0 + r.a.abs() + r.b.abs()));
    let values: Vec<f64> = nodes.iter().map(|&th| r.eval_f(th)).collect();
    let mut tangency = false;
    let mut boundary_zero = false;
    for (i, v) in values.iter().enumerate() {
        if v.abs() <= eps {
            if i == 0 || i == values.len() - 1 {
                boundary_zero = true;
            } else {
                tangency = true;
            }
        }
    }
    if tangency || boundary_zero {
        let mut flags = Vec::new();
        if tangency {
            flags.push(DegeneracyFlag::TangentZero);
        }
        if boundary_zero {
            flags.push(DegeneracyFlag::BoundaryRoot);
        }
        return quartic_oracle(m, p, q, r.u, info, flags);
    }

    let mut n_int = 0;
    let mut brackets = Vec::new();
    for i in 1..nodes.len() {
        if (values[i - 1] < 0.0) != (values[i] < 0.0) {
            n_int += 1;
            brackets.push((nodes[i - 1], nodes[i]));
        }
    }

    // Both tails rise to +∞: a root beyond u (resp. −u) exists iff the
    // boundary value is negative. Certify unconditionally.
    let (f0, fpi) = r.boundary_values();
    let pq = quartic_poly(m, p, q);
    let bound = sturm::cauchy_bound(&pq).unwrap() + 1.0;
    let (plus, minus) = (
        sturm::count_distinct_in_window(&pq, r.u, bound),
        sturm::count_distinct_in_window(&pq, -bound, -r.u),
    );
    let mut flags = Vec::new();
    if plus != usize::from(f0 < 0.0) || minus != usize::from(fpi < 0.0) {
        flags.push(DegeneracyFlag::NonGenericExterior);
    }
    let n_real = n_int + plus + minus;
    if n_real % 2 != 0 {
        flags.push(DegeneracyFlag::TangentZero);
        return quartic_oracle(m, p, q, r.u, info, flags);
    }

    let mut roots = Vec::with_capacity(n_real);
    for &(mut lo, mut hi) in &brackets {
        let mut flo = r.eval_f(lo);
        while hi - lo > 1e-13 {
            let mid = 0.5 * (lo + hi);
            let fm = r.eval_f(mid);
            if fm == 0.0 {
                lo = mid;
                break;
            }
            if (fm < 0.0) == (flo < 0.0) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        roots.push(r.u * (0.5 * (lo + hi)).cos());
    }
    if plus + minus > 0 {
        let bound = sturm::cauchy_bound(&pq).unwrap() + 1.0;
        let delta = 1e-12 * (1.0 + r.u);
        if plus > 0 {
            roots.extend(sturm::isolate_and_refine(&pq, r.u + delta, bound));
        }
        if minus > 0 {
            roots.extend(sturm::isolate_and_refine(&pq, -bound, -r.u - delta));
        }
    }
    roots.sort_by(|a, b| a.partial_cmp(b).unwrap());

    QuarticReport {
        n_int,
        n_ext_plus: plus,
        n_ext_minus: minus,
        n_real,
        f0: Some(f0),
        fpi: Some(fpi),
        roots,
        degenerate: flags,
        method: Method::TrigMethod,
        reduction: info,
    }
}

fn quartic_oracle(
    m: f64,
    p: f64,
    q: f64,
    u: f64,
    info: Option<(f64, f64, f64)>,
    mut flags: Vec<DegeneracyFlag>,
) -> QuarticReport {
    let pq = quartic_poly(m, p, q);
    if sturm::has_multiple_root(&pq) && !flags.contains(&DegeneracyFlag::TangentZero) {
        flags.push(DegeneracyFlag::TangentZero);
    }
    let roots = sturm::real_roots(&pq).unwrap_or_default();
    let tol = 1e-9 * (1.0 + u);
    let plus = roots.iter().filter(|&&t| t > u + tol).count();
    let minus = roots.iter().filter(|&&t| t < -u - tol).count();
    QuarticReport {
        n_int: roots.len() - plus - minus,
        n_ext_plus: plus,
        n_ext_minus: minus,
        n_real: roots.len(),
        f0: None,
        fpi: None,
        roots,
        degenerate: flags,
        method: Method::OracleFallback,
        reduction: info,
    }
}
