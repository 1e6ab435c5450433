//! Counting the real roots of a quintic without solving it.
//!
//! A real monic quintic has exactly one, three, or five real roots. This
//! crate decides which, by a change of variables rather than by root
//! finding: after depressing the quintic to P(t) = t⁵ + mt³ + nt² + pt + q,
//! the substitution t = u·cosθ with u = 2·sqrt(−m/5) (requires m < 0) turns
//! the question into counting the zeros of
//!
//! ```text
//! f(θ) = α·cos²θ + β·cosθ + cos5θ + γ        on [0, π]
//! ```
//!
//! — a bounded, oscillatory function with at most four interior critical
//! points, whose zeros are in bijection with the roots of P in [−u, u].
//! Roots outside [−u, u] are detected from the boundary signs f(0), f(π)
//! and certified by Sturm counting. Every classification is cross-checked
//! against an independent Sturm-sequence oracle, which also resolves the
//! degenerate cases (multiple roots, roots at ±u, m ≥ 0) that sign-change
//! counting cannot see.
//!
//! The same scheme one degree down classifies depressed quartics into
//! 0, 2, or 4 real roots via f₄(θ) = a·cosθ + cos4θ + b.
//!
//! # Quick start
//!
//! ```
//! use chebroot::{classify, MonicQuintic};
//!
//! // z⁵ − 5z³ + 5z has all five roots real.
//! let q = MonicQuintic::new(0.0, -5.0, 0.0, 5.0, 0.0)?;
//! let report = classify(&q);
//! assert_eq!(report.n_real, 5);
//! assert_eq!(report.roots.len(), 5);
//! # Ok::<(), chebroot::Error>(())
//! ```
//!
//! The `book/` directory of the repository walks through the method chapter
//! by chapter; every code block there compiles and runs as a doctest of
//! this crate.

pub mod classify;
pub mod config;
pub mod critical;
pub mod error;
pub mod poly;
pub mod quartic;
pub mod sturm;
pub mod trig;

#[cfg(doctest)]
mod book;

pub use classify::{
    classify, classify_with, count_exterior, count_interior, interior_zero_count,
    refine_interior_root, ClassificationReport, DegeneracyFlag, ExteriorCount, Method,
    ReductionInfo,
};
pub use config::Config;
pub use error::{Error, MethodNotApplicable};
pub use poly::{depress, depress_with, DepressedQuintic, MonicQuintic, Poly};
pub use quartic::{
    classify_quartic, classify_quartic_with, depress_quartic, reduce_quartic, DepressedQuartic,
    QuarticReduction, QuarticReport,
};
pub use sturm::{
    build_chain, cauchy_bound, count_real_roots, count_roots, isolate_and_refine, real_roots,
    SturmChain,
};
pub use trig::{chebyshev_t5, chebyshev_u4, reduce, TrigReduction};
