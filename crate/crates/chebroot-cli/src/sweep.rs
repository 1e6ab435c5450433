//! Parameter-space sweep: interior zero counts of f over an (α, β, γ) grid,
//! streamed as CSV. No source quintic is involved — the critical-point and
//! sign-change machinery runs on the parameters alone.

use std::io::Write;

use chebroot::interior_zero_count;

use crate::Failure;

/// One axis of the grid, parsed from `lo:hi:n`.
struct Axis {
    lo: f64,
    hi: f64,
    n: usize,
}

impl Axis {
    fn parse(raw: &str, name: &str) -> Result<Axis, Failure> {
        let parts: Vec<&str> = raw.split(':').collect();
        if parts.len() != 3 {
            return Err(Failure::usage(format!(
                "--{name} expects lo:hi:n (got `{raw}`)"
            )));
        }
        let lo: f64 = parts[0]
            .parse()
            .map_err(|_| Failure::invalid(format!("--{name}: `{}` is not a number", parts[0])))?;
        let hi: f64 = parts[1]
            .parse()
            .map_err(|_| Failure::invalid(format!("--{name}: `{}` is not a number", parts[1])))?;
        let n: usize = parts[2]
            .parse()
            .map_err(|_| Failure::usage(format!("--{name}: `{}` is not a count", parts[2])))?;
        if !lo.is_finite() || !hi.is_finite() {
            return Err(Failure::invalid(format!("--{name}: range must be finite")));
        }
        if n < 1 {
            return Err(Failure::usage(format!("--{name}: need at least one step")));
        }
        Ok(Axis { lo, hi, n })
    }

    fn value(&self, i: usize) -> f64 {
        if self.n == 1 {
            self.lo
        } else {
            self.lo + (self.hi - self.lo) * i as f64 / (self.n - 1) as f64
        }
    }
}

/// Emits `alpha,beta,gamma,n_int,f0,fpi` rows in grid order (α outermost).
pub fn cmd_sweep(alpha: &str, beta: &str, gamma: &str) -> Result<(), Failure> {
    let a = Axis::parse(alpha, "alpha")?;
    let b = Axis::parse(beta, "beta")?;
    let g = Axis::parse(gamma, "gamma")?;
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    writeln!(out, "alpha,beta,gamma,n_int,f0,fpi").ok();
    for i in 0..a.n {
        let av = a.value(i);
        for j in 0..b.n {
            let bv = b.value(j);
            for k in 0..g.n {
                let gv = g.value(k);
                let (n_int, f0, fpi) = interior_zero_count(av, bv, gv);
                writeln!(out, "{av},{bv},{gv},{n_int},{f0},{fpi}").ok();
            }
        }
    }
    Ok(())
}
