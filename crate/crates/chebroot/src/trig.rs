//! The cosine substitution: scale u, trigonometric parameters (α, β, γ),
//! the reduced equation f(θ), and its boundary values.
//!
//! For a depressed quintic P(t) = t⁵ + mt³ + nt² + pt + q with m < 0, the
//! substitution t = u·cosθ with u = 2·sqrt(−m/5) makes the cubic-term
//! coefficient match the quintuple-angle identity
//! 16cos⁵θ − 20cos³θ + 5cosθ = cos5θ exactly, collapsing the quintic to
//!
//! ```text
//! f(θ) = α·cos²θ + β·cosθ + cos5θ + γ
//! ```
//!
//! whose zeros on [0, π] are in bijection with the roots of P in [−u, u]
//! (f(θ) = (16/u⁵)·P(u·cosθ) identically).

use crate::error::{MethodNotApplicable, Result};
use crate::poly::DepressedQuintic;

/// Degree-five Chebyshev polynomial of the first kind:
/// T5(x) = 16x⁵ − 20x³ + 5x, with T5(cosθ) = cos5θ.
pub fn chebyshev_t5(x: f64) -> f64 {
    ((16.0 * x * x - 20.0) * x * x + 5.0) * x
}

/// Degree-four Chebyshev polynomial of the second kind:
/// U4(x) = 16x⁴ − 12x² + 1, with sin5θ = sinθ·U4(cosθ).
pub fn chebyshev_u4(x: f64) -> f64 {
    (16.0 * x * x - 12.0) * x * x + 1.0
}

/// Degree-three Chebyshev polynomial of the second kind:
/// U3(x) = 8x³ − 4x, with sin4θ = sinθ·U3(cosθ). Used by the quartic analogue.
pub fn chebyshev_u3(x: f64) -> f64 {
    (8.0 * x * x - 4.0) * x
}

/// The substitution scale and trigonometric parameters of a depressed
/// quintic with m < 0.
#[derive(Debug, Clone, PartialEq)]
pub struct TrigReduction {
    /// u = 2·sqrt(−m)/sqrt(5) > 0; the substitution is t = u·cosθ.
    pub u: f64,
    /// α = 16n/u³.
    pub alpha: f64,
    /// β = 16p/u⁴ − 5.
    pub beta: f64,
    /// γ = 16q/u⁵.
    pub gamma: f64,
    /// The reduced quintic this came from.
    pub source: DepressedQuintic,
}

/// Computes the reduction, or reports that the substitution is unusable:
/// m ≥ 0 (it does not exist), or coefficients so extreme that the scale
/// powers leave f64 range. The error is a typed, recoverable outcome; the
/// classifier falls back to the Sturm oracle in that case.
pub fn reduce(dq: &DepressedQuintic) -> Result<TrigReduction> {
    if !dq.m.is_finite() || dq.m >= 0.0 {
        return Err(MethodNotApplicable { m: dq.m }.into());
    }
    let u = 2.0 * (-dq.m / 5.0).sqrt();
    let u2 = -4.0 * dq.m / 5.0; // u² exactly, avoiding the sqrt round trip
    let u3 = u2 * u;
    let u4 = u2 * u2;
    let u5 = u4 * u;
    let r = TrigReduction {
        u,
        alpha: 16.0 * dq.n / u3,
        beta: 16.0 * dq.p / u4 - 5.0,
        gamma: 16.0 * dq.q / u5,
        source: *dq,
    };
    if ![r.u, r.alpha, r.beta, r.gamma]
        .iter()
        .all(|v| v.is_finite())
    {
        return Err(MethodNotApplicable { m: dq.m }.into());
    }
    Ok(r)
}

impl TrigReduction {
    /// Builds a reduction directly from (α, β, γ), for parameter-space work
    /// such as grid sweeps where no source quintic is given. Uses the
    /// canonical representative with m = −5 (so u = 2 and the parameters are
    /// stored exactly as passed).
    pub fn from_params(alpha: f64, beta: f64, gamma: f64) -> TrigReduction {
        TrigReduction {
            u: 2.0,
            alpha,
            beta,
            gamma,
            source: DepressedQuintic {
                m: -5.0,
                n: alpha / 2.0,
                p: beta + 5.0,
                q: 2.0 * gamma,
                shift: 0.0,
            },
        }
    }

    /// f(θ) = α·cos²θ + β·cosθ + cos5θ + γ.
    ///
    /// cos5θ is evaluated as cos(5θ) from the math library rather than via
    /// T5(cosθ): better conditioned near θ ∈ {0, π}. The polynomial route is
    /// kept for identity tests.
    pub fn eval_f(&self, theta: f64) -> f64 {
        let c = theta.cos();
        self.alpha * c * c + self.beta * c + (5.0 * theta).cos() + self.gamma
    }

    /// f′(θ) = −2α·cosθ·sinθ − β·sinθ − 5·sin5θ.
    pub fn eval_f_deriv(&self, theta: f64) -> f64 {
        let (s, c) = theta.sin_cos();
        -2.0 * self.alpha * c * s - self.beta * s - 5.0 * (5.0 * theta).sin()
    }

    /// (f(0), f(π)) = (α + β + 1 + γ, α − β − 1 + γ).
    ///
    /// Since f(0) = 16·P(u)/u⁵ and f(π) = 16·P(−u)/u⁵ with u⁵ > 0, these
    /// carry the signs of P at ±u and drive the exterior-root indicators.
    pub fn boundary_values(&self) -> (f64, f64) {
        (
            self.alpha + self.beta + 1.0 + self.gamma,
            self.alpha - self.beta - 1.0 + self.gamma,
        )
    }
}
