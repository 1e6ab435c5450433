/// Tunable tolerances for classification.
///
/// The defaults are what the test suite pins down; overriding them is only
/// useful for exploring borderline inputs (for example disabling coefficient
/// snapping to reach the tiny-u oracle route).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Config {
    /// Absolute override for the tangency threshold. `None` uses the scaled
    /// default 1e-9 · (1 + |α| + |β| + |γ|). An f-value at an evaluation node
    /// below the threshold is treated as a possible tangency or boundary
    /// root and resolved by the oracle.
    pub eps_tangent: Option<f64>,

    /// Below this substitution scale the trigonometric parameters are too
    /// ill-conditioned to trust (they grow like 1/u⁵); the classifier routes
    /// to the oracle and flags `SmallU`.
    pub u_min: f64,

    /// Relative snap threshold applied to depressed coefficients: a computed
    /// coefficient with |c| ≤ snap_rel · (1 + max input |coefficient|) is set
    /// to exactly 0 before classification, which keeps closed-form fast paths
    /// (α = 0) reachable from near-zero float inputs.
    pub snap_rel: f64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            eps_tangent: None,
            u_min: 1e-6,
            snap_rel: 1e-12,
        }
    }
}

impl Config {
    /// Tangency threshold for the reduced equation with the given parameters.
    pub(crate) fn eps_tangent_for(&self, alpha: f64, beta: f64, gamma: f64) -> f64 {
        self.eps_tangent
            .unwrap_or(1e-9 * (1.0 + alpha.abs() + beta.abs() + gamma.abs()))
    }
}
