//! Independent real-root counting and isolation via Sturm chains.
//!
//! This is the certification side of the crate: every classification the
//! cosine substitution produces is cross-checked against these counts, and
//! degenerate inputs (tangencies, multiple roots, m ≥ 0) are resolved here.
//!
//! The chains are floating-point with scale-relative truncation of
//! negligible remainders. Each chain member is normalized to unit maximum
//! coefficient — a positive rescaling, so sign variations are untouched —
//! which keeps the Euclidean divisions well conditioned for the degree ≤ 8
//! polynomials this crate ever sees.

use crate::error::{Error, Result};
use crate::poly::Poly;

/// Relative truncation threshold for chain remainders.
const CHAIN_TRUNC: f64 = 1e-12;
/// Looser threshold for the gcd detector: it decides square-freeness, it
/// does not count roots.
const GCD_TRUNC: f64 = 1e-10;
/// A chain value this small (relative to the evaluation scale) counts as
/// "vanishing" and triggers the endpoint perturbation policy.
const VANISH_REL: f64 = 1e-11;

/// Signed-remainder sequence: P, P′, then negated remainders of successive
/// divisions, ending at a (near-)constant or at the gcd-like last nonzero
/// element when P is not square-free.
#[derive(Debug, Clone)]
pub struct SturmChain {
    polys: Vec<Poly>,
}

/// Builds the Sturm chain of `p`.
pub fn build_chain(p: &Poly) -> Result<SturmChain> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !p.is_finite() {
        return Err(Error::InvalidInput(
            "polynomial has non-finite coefficients".into(),
        ));
    }
    let mut polys = vec![p.normalized()];
    let d = p.derivative();
    if d.is_zero() {
        return Ok(SturmChain { polys });
    }
    polys.push(d.normalized());
    loop {
        let len = polys.len();
        let last = &polys[len - 1];
        if last.degree() == 0 {
            break;
        }
        let (_, rem) = polys[len - 2].div_rem_trunc(last, CHAIN_TRUNC);
        if rem.is_zero() {
            // Non-square-free input: the chain ends at (a multiple of) the gcd.
            break;
        }
        polys.push(rem.neg().normalized());
    }
    Ok(SturmChain { polys })
}

impl SturmChain {
    pub fn polys(&self) -> &[Poly] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// True when some chain member evaluates to (numerically) zero at x.
    fn vanishes_at(&self, x: f64) -> bool {
        let s = eval_scale(x);
        self.polys.iter().any(|p| p.eval(x).abs() <= VANISH_REL * s)
    }

    /// Number of sign changes in the chain values at x, zeros skipped.
    fn variations(&self, x: f64) -> usize {
        let mut count = 0;
        let mut last = 0.0_f64;
        for p in &self.polys {
            let v = p.eval(x);
            if v == 0.0 {
                continue;
            }
            if last != 0.0 && (v < 0.0) != (last < 0.0) {
                count += 1;
            }
            last = v;
        }
        count
    }
}

/// Evaluation scale for vanish tests on normalized chain members of degree ≤ 8.
fn eval_scale(x: f64) -> f64 {
    let a = x.abs().max(1.0);
    let a2 = a * a;
    let a4 = a2 * a2;
    a4 * a4
}

/// Nudges `x` in the given direction (±1) until no chain member vanishes
/// there, starting from a 1e-12 relative step and escalating tenfold.
fn clear_of_roots(chain: &SturmChain, x: f64, dir: f64) -> f64 {
    let mut step = 1e-12 * (1.0 + x.abs());
    let mut y = x;
    for _ in 0..12 {
        if !chain.vanishes_at(y) {
            return y;
        }
        y = x + dir * step;
        step *= 10.0;
    }
    y
}

/// Counts distinct real roots of the chain's polynomial in (lo, hi].
///
/// If a chain member vanishes at an endpoint, the endpoint is perturbed
/// outward (lo down, hi up) by 1e-12 relative steps until it clears, so the
/// count is always well defined.
pub fn count_roots(chain: &SturmChain, lo: f64, hi: f64) -> usize {
    assert!(lo < hi, "count_roots requires lo < hi");
    let lo = clear_of_roots(chain, lo, -1.0);
    let hi = clear_of_roots(chain, hi, 1.0);
    chain.variations(lo).saturating_sub(chain.variations(hi))
}

/// Counting window with caller-controlled endpoints: endpoints are moved
/// *into* the window when a chain member vanishes there, so roots sitting
/// exactly on a boundary are excluded rather than double counted.
pub(crate) fn count_roots_exclusive(chain: &SturmChain, lo: f64, hi: f64) -> usize {
    let lo = clear_of_roots(chain, lo, 1.0);
    let hi = clear_of_roots(chain, hi, -1.0);
    if lo >= hi {
        return 0;
    }
    chain.variations(lo).saturating_sub(chain.variations(hi))
}

/// 1 + max |aᵢ / a_lead| over non-leading coefficients: every real root of
/// the polynomial lies in [−B, B].
pub fn cauchy_bound(p: &Poly) -> Result<f64> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let lead = p.leading();
    let m = p.coeffs()[..p.degree()]
        .iter()
        .fold(0.0_f64, |m, c| m.max((c / lead).abs()));
    Ok(1.0 + m)
}

/// Fujiwara root bound 2·max |aᵢ/a_lead|^(1/(n−i)): every root of `p` has
/// magnitude at most this. Used as a variable scale — dividing the variable
/// by it bounds every non-leading coefficient by 2^−(n−i), which is what
/// keeps chains on wild-magnitude inputs well conditioned.
fn root_scale(p: &Poly) -> f64 {
    let n = p.degree();
    if n == 0 {
        return 1.0;
    }
    let lead = p.leading();
    let mut m = 0.0_f64;
    for (i, &a) in p.coeffs()[..n].iter().enumerate() {
        if a != 0.0 {
            m = m.max((a / lead).abs().powf(1.0 / (n - i) as f64));
        }
    }
    if m == 0.0 || !m.is_finite() {
        1.0
    } else if (2.0 * m).is_finite() {
        2.0 * m
    } else {
        m // doubling overflows at the f64 range edge; m still bounds w by 2
    }
}

/// q(w) = p(c·w) / (lead·c^deg): the same roots scaled by 1/c, with unit
/// leading coefficient. Division is stepwise so no intermediate power of c
/// can overflow.
fn rescaled(p: &Poly, c: f64) -> Poly {
    let n = p.degree();
    let lead = p.leading();
    let coeffs = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, &a)| {
            let mut v = a / lead;
            for _ in 0..(n - i) {
                v /= c;
            }
            v
        })
        .collect();
    Poly::new(coeffs)
}

/// Distinct roots of `p` strictly inside the window (lo, hi), counted on
/// the Fujiwara-rescaled polynomial; endpoints sitting on roots are moved
/// into the window, so boundary roots are excluded rather than double
/// counted. This is the certification primitive behind the exterior
/// windows.
pub(crate) fn count_distinct_in_window(p: &Poly, lo: f64, hi: f64) -> usize {
    if p.degree() == 0 || lo >= hi {
        return 0;
    }
    let c = root_scale(p);
    let chain = match build_chain(&rescaled(p, c)) {
        Ok(chain) => chain,
        Err(_) => return 0,
    };
    count_roots_exclusive(&chain, lo / c, hi / c)
}

/// Polynomial gcd via Euclid with tolerance-aware truncation, normalized.
/// Non-finite inputs (or overflow mid-cascade) report a constant gcd, i.e.
/// "cannot certify a common factor".
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if !a.is_finite() || !b.is_finite() {
        return Poly::constant(1.0);
    }
    let mut f = a.normalized();
    let mut g = b.normalized();
    if f.degree() < g.degree() {
        std::mem::swap(&mut f, &mut g);
    }
    while !g.is_zero() {
        let (_, r) = f.div_rem_trunc(&g, GCD_TRUNC);
        let r = r.normalized();
        if !r.is_finite() {
            return Poly::constant(1.0);
        }
        f = g;
        g = r;
    }
    f
}

/// True when gcd(P, P′) is non-constant, i.e. P has a multiple root (up to
/// the detector's tolerance). Runs on the Fujiwara-rescaled polynomial —
/// variable scaling is a root-structure isomorphism, so the gcd degree is
/// unchanged and the Euclidean cascade stays conditioned.
pub fn has_multiple_root(p: &Poly) -> bool {
    if p.degree() < 2 || !p.is_finite() {
        return false;
    }
    let q = rescaled(p, root_scale(p));
    gcd(&q, &q.derivative()).degree() >= 1
}

/// P divided by gcd(P, P′): same distinct roots, all simple.
pub fn square_free_part(p: &Poly) -> Poly {
    let g = gcd(p, &p.derivative());
    if g.degree() == 0 {
        return p.clone();
    }
    let (q, _) = p.div_rem_trunc(&g, GCD_TRUNC);
    if q.is_zero() {
        p.clone()
    } else {
        q
    }
}

/// Bisection refinement of a bracketed simple root of `f` to the given
/// relative width. The bracket must carry a strict sign change.
fn bisect_root(f: &Poly, mut lo: f64, mut hi: f64) -> f64 {
    let mut flo = f.eval(lo);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= 1e-13 * (1.0 + mid.abs()) {
            return mid;
        }
        let fm = f.eval(mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm < 0.0) == (flo < 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Isolates the distinct real roots of `p` in (lo, hi] by recursive Sturm
/// counting, then refines each to 1e-13 relative width by sign bisection on
/// the square-free part. Returns sorted distinct roots.
///
/// Isolation runs in the Fujiwara-rescaled variable and results map back by
/// the scale factor.
pub fn isolate_and_refine(p: &Poly, lo: f64, hi: f64) -> Vec<f64> {
    assert!(lo < hi);
    if p.is_zero() || p.degree() == 0 {
        return Vec::new();
    }
    let c = root_scale(p);
    let q = rescaled(p, c);
    let chain = match build_chain(&q) {
        Ok(chain) => chain,
        Err(_) => return Vec::new(),
    };
    let sf = square_free_part(&q);
    let lo = clear_of_roots(&chain, lo / c, -1.0);
    let hi = clear_of_roots(&chain, hi / c, 1.0);
    let mut intervals = Vec::new();
    split_intervals(&chain, lo, hi, &mut intervals, 0);
    let mut roots: Vec<f64> = intervals
        .into_iter()
        .map(|(a, b)| c * refine_in_interval(&q, &sf, &chain, a, b))
        .collect();
    roots.sort_by(|x, y| x.partial_cmp(y).unwrap());
    roots
}

fn split_intervals(chain: &SturmChain, lo: f64, hi: f64, out: &mut Vec<(f64, f64)>, depth: usize) {
    let n = chain.variations(lo).saturating_sub(chain.variations(hi));
    match n {
        0 => {}
        1 => out.push((lo, hi)),
        _ => {
            if depth > 80 || hi - lo <= 1e-13 * (1.0 + lo.abs().max(hi.abs())) {
                // Unresolvable cluster; report the midpoint once per counted root.
                for _ in 0..n {
                    out.push((lo, hi));
                }
                return;
            }
            let mid = clear_of_roots(chain, 0.5 * (lo + hi), 1.0);
            if mid <= lo || mid >= hi {
                for _ in 0..n {
                    out.push((lo, hi));
                }
                return;
            }
            split_intervals(chain, lo, mid, out, depth + 1);
            split_intervals(chain, mid, hi, out, depth + 1);
        }
    }
}

fn refine_in_interval(p: &Poly, sf: &Poly, chain: &SturmChain, lo: f64, hi: f64) -> f64 {
    // The square-free part has exactly one simple root here, so it changes
    // sign; fall back to p itself if numerical noise hides the change.
    for f in [sf, p] {
        let flo = f.eval(lo);
        let fhi = f.eval(hi);
        if flo == 0.0 {
            return lo;
        }
        if fhi == 0.0 {
            return hi;
        }
        if (flo < 0.0) != (fhi < 0.0) {
            return bisect_root(f, lo, hi);
        }
    }
    // No usable sign change (even-multiplicity residue): shrink by counting.
    let mut a = lo;
    let mut b = hi;
    for _ in 0..100 {
        if b - a <= 1e-13 * (1.0 + a.abs().max(b.abs())) {
            break;
        }
        let mid = clear_of_roots(chain, 0.5 * (a + b), 1.0);
        if mid <= a || mid >= b {
            break;
        }
        if chain.variations(a) > chain.variations(mid) {
            b = mid;
        } else {
            a = mid;
        }
    }
    0.5 * (a + b)
}

/// Distinct real roots of `p` over the whole line.
pub fn real_roots(p: &Poly) -> Result<Vec<f64>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !p.is_finite() {
        return Err(Error::InvalidInput(
            "polynomial has non-finite coefficients".into(),
        ));
    }
    if p.degree() == 0 {
        return Ok(Vec::new());
    }
    // The Fujiwara scale bounds every root, so ±1.5 covers the rescaled line.
    let c = root_scale(p);
    Ok(isolate_and_refine(p, -1.5 * c, 1.5 * c))
}

/// Number of distinct real roots of `p` over the whole line.
pub fn count_real_roots(p: &Poly) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.degree() == 0 {
        return Ok(0);
    }
    let chain = build_chain(&rescaled(p, root_scale(p)))?;
    Ok(count_roots(&chain, -2.0, 2.0))
}

/// Multiplicity of the root `r` of `p`, by counting vanishing derivatives
/// of the rescaled polynomial (bounded coefficients, |w| ≤ 1 at true roots).
pub fn multiplicity_at(p: &Poly, r: f64) -> u32 {
    if p.degree() == 0 {
        return 1;
    }
    let c = root_scale(p);
    let w = r / c;
    let mut d = rescaled(p, c);
    let mut k = 0;
    while k <= p.degree() as u32 {
        if d.eval(w).abs() > 1e-7 * d.max_coeff().max(1e-300) {
            break;
        }
        k += 1;
        d = d.derivative();
    }
    k.max(1)
}
