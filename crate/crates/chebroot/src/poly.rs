//! Polynomial representations, evaluation, derivatives, and the depression
//! step that removes the quartic term from a monic quintic.

use crate::config::Config;
use crate::error::{Error, Result};

/// Dense univariate polynomial with real coefficients, ascending degree.
///
/// Trailing zero coefficients are trimmed on construction, so the leading
/// coefficient is nonzero unless the polynomial is identically zero.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly {
    coeffs: Vec<f64>,
}

impl Poly {
    /// Builds a polynomial from ascending-degree coefficients.
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.len() > 1 && *coeffs.last().unwrap() == 0.0 {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0.0);
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![0.0] }
    }

    pub fn constant(c: f64) -> Self {
        Poly::new(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == 0.0
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn leading(&self) -> f64 {
        *self.coeffs.last().unwrap()
    }

    /// Horner evaluation.
    pub fn eval(&self, t: f64) -> f64 {
        let mut acc = 0.0;
        for &c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    /// Formal derivative; the degree drops by exactly one (or to the zero
    /// polynomial for constants).
    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() == 1 {
            return Poly::zero();
        }
        let d: Vec<f64> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| c * k as f64)
            .collect();
        Poly::new(d)
    }

    /// Largest coefficient magnitude.
    pub fn max_coeff(&self) -> f64 {
        self.coeffs.iter().fold(0.0_f64, |m, c| m.max(c.abs()))
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_finite())
    }

    /// Scales every coefficient so the largest magnitude is 1. Positive
    /// scaling preserves signs, roots and Sturm variations.
    pub(crate) fn normalized(&self) -> Poly {
        let m = self.max_coeff();
        if m == 0.0 {
            return self.clone();
        }
        Poly::new(self.coeffs.iter().map(|c| c / m).collect())
    }

    pub(crate) fn neg(&self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    /// Euclidean division: returns (quotient, remainder). Remainder
    /// coefficients with magnitude at most `trunc_rel` times the larger
    /// input coefficient scale are zeroed, which keeps floating-point Sturm
    /// chains from chasing noise.
    pub(crate) fn div_rem_trunc(&self, div: &Poly, trunc_rel: f64) -> (Poly, Poly) {
        assert!(!div.is_zero(), "division by zero polynomial");
        if self.degree() < div.degree() {
            return (Poly::zero(), self.clone());
        }
        let scale = self.max_coeff().max(div.max_coeff()).max(1.0);
        let tol = trunc_rel * scale;
        let mut rem = self.coeffs.clone();
        let dlead = div.leading();
        let ddeg = div.degree();
        let qdeg = self.degree() - ddeg;
        let mut quot = vec![0.0; qdeg + 1];
        for k in (0..=qdeg).rev() {
            let q = rem[k + ddeg] / dlead;
            quot[k] = q;
            if q == 0.0 {
                continue;
            }
            for (i, &dc) in div.coeffs.iter().enumerate() {
                rem[k + i] -= q * dc;
            }
        }
        rem.truncate(ddeg.max(1));
        for c in rem.iter_mut() {
            if c.abs() <= tol {
                *c = 0.0;
            }
        }
        (Poly::new(quot), Poly::new(rem))
    }

    /// P(t) ↦ P(t + c), expanded symbolically via binomial coefficients.
    pub fn shifted(&self, c: f64) -> Poly {
        let n = self.coeffs.len();
        let mut out = vec![0.0; n];
        // (t + c)^k = Σ_j C(k, j) c^(k−j) t^j
        for (k, &a) in self.coeffs.iter().enumerate() {
            if a == 0.0 {
                continue;
            }
            let mut binom = 1.0; // C(k, j), built up from j = k downwards
            let mut cpow = 1.0;
            for j in (0..=k).rev() {
                out[j] += a * binom * cpow;
                if j > 0 {
                    binom = binom * j as f64 / (k - j + 1) as f64;
                    cpow *= c;
                }
            }
        }
        Poly::new(out)
    }
}

/// General monic quintic z⁵ + a4·z⁴ + a3·z³ + a2·z² + a1·z + a0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MonicQuintic {
    pub a4: f64,
    pub a3: f64,
    pub a2: f64,
    pub a1: f64,
    pub a0: f64,
}

impl MonicQuintic {
    /// All coefficients must be finite.
    pub fn new(a4: f64, a3: f64, a2: f64, a1: f64, a0: f64) -> Result<Self> {
        for (name, v) in [("a4", a4), ("a3", a3), ("a2", a2), ("a1", a1), ("a0", a0)] {
            if !v.is_finite() {
                return Err(Error::InvalidInput(format!(
                    "coefficient {name} = {v} is not finite"
                )));
            }
        }
        Ok(MonicQuintic { a4, a3, a2, a1, a0 })
    }

    pub fn eval(&self, z: f64) -> f64 {
        ((((z + self.a4) * z + self.a3) * z + self.a2) * z + self.a1) * z + self.a0
    }

    pub fn to_poly(&self) -> Poly {
        Poly::new(vec![self.a0, self.a1, self.a2, self.a3, self.a4, 1.0])
    }

    pub fn max_coeff(&self) -> f64 {
        [self.a4, self.a3, self.a2, self.a1, self.a0]
            .into_iter()
            .fold(0.0_f64, |m, c| m.max(c.abs()))
    }
}

/// Depressed quintic t⁵ + m·t³ + n·t² + p·t + q, obtained from a monic
/// quintic by the shift t = z + a4/5 (so P(t) = Q(t − shift) and z-roots are
/// recovered as z = t − shift).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DepressedQuintic {
    pub m: f64,
    pub n: f64,
    pub p: f64,
    pub q: f64,
    /// a4/5 — the centroid of the original roots; the five depressed roots
    /// sum to zero.
    pub shift: f64,
}

impl DepressedQuintic {
    pub fn eval(&self, t: f64) -> f64 {
        ((((t) * t + self.m) * t + self.n) * t + self.p) * t + self.q
    }

    pub fn to_poly(&self) -> Poly {
        Poly::new(vec![self.q, self.p, self.n, self.m, 0.0, 1.0])
    }
}

/// Removes the quartic term by the shift substitution, with default snapping.
pub fn depress(q: &MonicQuintic) -> DepressedQuintic {
    depress_with(q, &Config::default())
}

/// Removes the quartic term; coefficients within `cfg.snap_rel` of zero
/// (relative to the input coefficient scale) are snapped to exactly 0 so
/// closed-form fast paths stay reachable from rounded inputs.
pub fn depress_with(q: &MonicQuintic, cfg: &Config) -> DepressedQuintic {
    let shift = q.a4 / 5.0;
    let shifted = q.to_poly().shifted(-shift);
    let c = shifted.coeffs();
    debug_assert!(c.len() == 6);
    let scale = 1.0 + q.max_coeff();
    let snap = |v: f64| {
        if v.abs() <= cfg.snap_rel * scale {
            0.0
        } else {
            v
        }
    };
    // The quartic coefficient c[4] vanishes up to rounding; it is dropped.
    debug_assert!(c[4].abs() <= 1e-12 * scale.max(shift.abs().powi(4)));
    DepressedQuintic {
        m: snap(c[3]),
        n: snap(c[2]),
        p: snap(c[1]),
        q: snap(c[0]),
        shift,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn depress_paper_quintic() {
        // z⁵ − 5z³ + 5z is already depressed.
        let q = MonicQuintic::new(0.0, -5.0, 0.0, 5.0, 0.0).unwrap();
        let d = depress(&q);
        assert_eq!((d.m, d.n, d.p, d.q, d.shift), (-5.0, 0.0, 5.0, 0.0, 0.0));
    }

    #[test]
    fn depress_zero_quintic() {
        let q = MonicQuintic::new(0.0, 0.0, 0.0, 0.0, 0.0).unwrap();
        let d = depress(&q);
        assert_eq!((d.m, d.n, d.p, d.q, d.shift), (0.0, 0.0, 0.0, 0.0, 0.0));
    }

    #[test]
    fn depress_binomial_power() {
        // (z+1)⁵ = z⁵ + 5z⁴ + 10z³ + 10z² + 5z + 1 collapses to t⁵ with shift 1.
        let q = MonicQuintic::new(5.0, 10.0, 10.0, 5.0, 1.0).unwrap();
        let d = depress(&q);
        assert_eq!((d.m, d.n, d.p, d.q), (0.0, 0.0, 0.0, 0.0));
        assert_eq!(d.shift, 1.0);
        // z-root of (z+1)⁵ is −1 = t − shift at t = 0.
        assert_eq!(0.0 - d.shift, -1.0);
    }

    #[test]
    fn depress_matches_hand_expansion() {
        // Hand-collapsed binomial formulas for P(t) = Q(t − s), s = a4/5.
        let (a4, a3, a2, a1, a0) = (2.5, -1.0, 4.0, 0.5, -3.0);
        let q = MonicQuintic::new(a4, a3, a2, a1, a0).unwrap();
        let s = a4 / 5.0;
        let m = a3 - 10.0 * s * s;
        let n = 20.0 * s.powi(3) - 3.0 * a3 * s + a2;
        let p = -15.0 * s.powi(4) + 3.0 * a3 * s * s - 2.0 * a2 * s + a1;
        let qq = 4.0 * s.powi(5) - a3 * s.powi(3) + a2 * s * s - a1 * s + a0;
        let d = depress(&q);
        assert!((d.m - m).abs() < 1e-12);
        assert!((d.n - n).abs() < 1e-12);
        assert!((d.p - p).abs() < 1e-12);
        assert!((d.q - qq).abs() < 1e-12);
    }

    #[test]
    fn rejects_non_finite() {
        assert!(matches!(
            MonicQuintic::new(f64::NAN, 0.0, 0.0, 0.0, 0.0),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            MonicQuintic::new(0.0, f64::INFINITY, 0.0, 0.0, 0.0),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn eval_examples() {
        // t⁵ − 5t³ + 5t at 0
        let p = Poly::new(vec![0.0, 5.0, 0.0, -5.0, 0.0, 1.0]);
        assert_eq!(p.eval(0.0), 0.0);
        // t⁵ − 5t³ + t − 5 at 2: 32 − 40 + 2 − 5
        let p = Poly::new(vec![-5.0, 1.0, 0.0, -5.0, 0.0, 1.0]);
        assert_eq!(p.eval(2.0), -11.0);
        // t⁵ − 5t³ + t² + 2t + 5 at −2: −32 + 40 + 4 − 4 + 5
        let p = Poly::new(vec![5.0, 2.0, 1.0, -5.0, 0.0, 1.0]);
        assert_eq!(p.eval(-2.0), 13.0);
    }

    #[test]
    fn third_derivative_of_depressed_quintic() {
        // t⁵ + mt³ + nt² + pt + q → P''' = 60t² + 6m
        let m = -3.25;
        let p = Poly::new(vec![1.5, -2.0, 0.75, m, 0.0, 1.0]);
        let d3 = p.derivative().derivative().derivative();
        assert_eq!(d3.coeffs(), &[6.0 * m, 0.0, 60.0]);
    }

    #[test]
    fn derivative_edge_cases() {
        assert!(Poly::constant(7.0).derivative().is_zero());
        let sq = Poly::new(vec![0.0, 0.0, 1.0]);
        assert_eq!(sq.derivative().coeffs(), &[0.0, 2.0]);
    }

    #[test]
    fn shifted_agrees_with_eval() {
        let p = Poly::new(vec![-3.0, 2.0, 0.0, 1.0, -0.5, 1.0]);
        let s = p.shifted(1.75);
        for &t in &[-2.0, -0.3, 0.0, 0.9, 3.1] {
            let want = p.eval(t + 1.75);
            let got = s.eval(t);
            assert!((want - got).abs() <= 1e-10 * (1.0 + want.abs()));
        }
    }

    #[test]
    fn division_round_trips() {
        let a = Poly::new(vec![1.0, -2.0, 0.0, 4.0, 1.0]);
        let b = Poly::new(vec![-1.0, 1.0, 2.0]);
        let (q, r) = a.div_rem_trunc(&b, 0.0);
        assert!(r.degree() < b.degree());
        for &t in &[-1.5, 0.0, 0.5, 2.0] {
            let recon = q.eval(t) * b.eval(t) + r.eval(t);
            assert!((recon - a.eval(t)).abs() < 1e-10);
        }
    }
}
