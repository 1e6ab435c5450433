//! Interior critical points of f on (0, π).
//!
//! Writing x = cosθ and factoring sin5θ = sinθ·U4(x) out of f′ (sinθ > 0 on
//! the open interval), the critical points are the roots in (−1, 1) of the
//! quartic
//!
//! ```text
//! g(x) = 80x⁴ − 60x² + 2αx + (β + 5)
//! ```
//!
//! With at most four of them, f has at most five monotone segments on
//! [0, π], which is what makes sign-change counting at the critical nodes an
//! exact interior-zero count.

use crate::poly::Poly;
use crate::sturm;
use crate::trig::TrigReduction;

/// Roots of g exactly on the unit circle boundary are excluded from the
/// critical set (endpoint behavior belongs to the boundary values); anything
/// this close to ±1 is flagged instead.
const BOUNDARY_EXCLUSION: f64 = 1e-10;
/// Isolated roots of g closer than this in x are treated as one critical
/// point; multiplicity of g does not change the monotone-segment split.
const CLUSTER_WIDTH: f64 = 1e-9;

/// The sorted interior critical points of f.
#[derive(Debug, Clone, PartialEq)]
pub struct CriticalSet {
    /// Critical angles, strictly increasing in (0, π).
    pub thetas: Vec<f64>,
    /// The corresponding x = cosθ roots of g (descending, matching thetas).
    pub xs: Vec<f64>,
    /// Whether the α = 0 biquadratic closed form produced the roots.
    pub used_biquadratic: bool,
    /// A root of g fell within 1e-10 of ±1: endpoint-degenerate geometry.
    pub near_boundary: bool,
}

/// g(x) = 80x⁴ − 60x² + 2αx + (β + 5).
pub fn critical_g(r: &TrigReduction, x: f64) -> f64 {
    (80.0 * x * x - 60.0) * x * x + 2.0 * r.alpha * x + (r.beta + 5.0)
}

/// All critical points of f in (0, π), via the closed form when α = 0 and
/// Sturm isolation of g otherwise.
pub fn solve_critical(r: &TrigReduction) -> CriticalSet {
    let (xs, used_biquadratic) = if r.alpha == 0.0 {
        (biquadratic_roots(r.beta), true)
    } else {
        (isolation_roots(r.alpha, r.beta), false)
    };
    build_set(r, xs, used_biquadratic)
}

/// Closed-form roots of 80x⁴ − 60x² + (β + 5) = 0 in (−1, 1), descending.
///
/// Solving the biquadratic for x² gives x² = (3 ± sqrt(9 − (4/5)(β+5)))/8;
/// real critical points exist only while β ≤ 25/4.
pub fn solve_critical_biquadratic(r: &TrigReduction) -> CriticalSet {
    build_set(r, biquadratic_roots(r.beta), true)
}

/// General path: Sturm isolation of g on (−1, 1) plus bisection, no closed
/// forms. Used for α ≠ 0 and as the cross-check for the biquadratic branch.
pub fn solve_critical_isolation(r: &TrigReduction) -> CriticalSet {
    build_set(r, isolation_roots(r.alpha, r.beta), false)
}

fn biquadratic_roots(beta: f64) -> Vec<f64> {
    let disc = 9.0 - 0.8 * (beta + 5.0);
    let mut xs = Vec::new();
    if disc < 0.0 {
        return xs;
    }
    let s = disc.sqrt();
    for x2 in [(3.0 + s) / 8.0, (3.0 - s) / 8.0] {
        if x2 >= 0.0 {
            let x = x2.sqrt();
            xs.push(x);
            if x > 0.0 {
                xs.push(-x);
            }
        }
    }
    xs.sort_by(|a, b| b.partial_cmp(a).unwrap());
    xs
}

fn isolation_roots(alpha: f64, beta: f64) -> Vec<f64> {
    let g = Poly::new(vec![beta + 5.0, 2.0 * alpha, -60.0, 0.0, 80.0]);
    sturm::isolate_and_refine(&g, -1.0, 1.0)
        .into_iter()
        .rev() // descending x so θ = arccos(x) comes out ascending
        .collect()
}

fn build_set(r: &TrigReduction, xs_desc: Vec<f64>, used_biquadratic: bool) -> CriticalSet {
    let mut xs: Vec<f64> = Vec::new();
    let mut near_boundary = false;
    for x in xs_desc {
        if x.abs() >= 1.0 - BOUNDARY_EXCLUSION {
            if x.abs() < 1.0 + BOUNDARY_EXCLUSION {
                near_boundary = true;
            }
            continue;
        }
        if let Some(&prev) = xs.last() {
            if (prev - x).abs() <= CLUSTER_WIDTH {
                continue;
            }
        }
        xs.push(x);
    }
    let thetas: Vec<f64> = xs.iter().map(|x| x.acos()).collect();
    debug_assert!(thetas.windows(2).all(|w| w[0] < w[1]));
    debug_assert!(thetas.len() <= 4);
    let eps_g = 1e-8 * (1.0 + r.alpha.abs() + r.beta.abs());
    debug_assert!(xs.iter().all(|&x| critical_g(r, x).abs() <= eps_g));
    debug_assert!(thetas
        .iter()
        .all(|&th| r.eval_f_deriv(th).abs() <= 1e-7 * (1.0 + r.alpha.abs() + r.beta.abs())));
    CriticalSet {
        thetas,
        xs,
        used_biquadratic,
        near_boundary,
    }
}
