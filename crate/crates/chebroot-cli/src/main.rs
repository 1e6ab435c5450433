//! `chebroot` — classify the real roots of quintics and quartics from the
//! command line.
//!
//! Subcommands: `classify` (quintic, 6 coefficients), `quartic` (5
//! coefficients, depressed internally), `plot-f` (CSV samples of the reduced
//! equation), `sweep` (CSV grid over the trigonometric parameters) and
//! `oracle` (Sturm counts and roots for any degree 1–5 polynomial).
//!
//! Exit codes: 0 success, 2 invalid input, 3 method not applicable in a mode
//! without fallback, 64 usage.

use std::f64::consts::PI;
use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use chebroot::{classify_with, depress_with, reduce, Config, MonicQuintic};

mod output;
mod sweep;

use output::{render_oracle, render_quartic, render_quintic};

const EXIT_INVALID: u8 = 2;
const EXIT_NOT_APPLICABLE: u8 = 3;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(
    name = "chebroot",
    version,
    about = "Counts the real roots of quintics (1/3/5) and quartics (0/2/4) without solving them",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a quintic a5·z⁵ + … + a0 (descending coefficients).
    Classify {
        /// Coefficients a5 a4 a3 a2 a1 a0, descending degree; a5 ≠ 0.
        #[arg(allow_negative_numbers = true)]
        coeffs: Vec<String>,
        #[command(flatten)]
        opts: ReportOpts,
    },
    /// Classify a quartic a4·z⁴ + … + a0 (depressed internally).
    Quartic {
        /// Coefficients a4 a3 a2 a1 a0, descending degree; a4 ≠ 0.
        #[arg(allow_negative_numbers = true)]
        coeffs: Vec<String>,
        #[command(flatten)]
        opts: ReportOpts,
    },
    /// Stream CSV samples (`theta,f`) of the reduced equation on [0, π].
    #[command(name = "plot-f")]
    PlotF {
        /// Quintic coefficients a5 … a0, descending degree.
        #[arg(allow_negative_numbers = true)]
        coeffs: Vec<String>,
        /// Number of sample rows (θ uniform on [0, π], endpoints included).
        #[arg(long, default_value_t = 2001)]
        samples: usize,
    },
    /// Stream a CSV grid (`alpha,beta,gamma,n_int,f0,fpi`) over parameters.
    Sweep {
        /// Alpha range as lo:hi:n.
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        /// Beta range as lo:hi:n.
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        /// Gamma range as lo:hi:n.
        #[arg(long, allow_hyphen_values = true)]
        gamma: String,
    },
    /// Sturm-oracle count and refined roots for a degree 1–5 polynomial.
    Oracle {
        /// Coefficients, descending degree (2 to 6 values).
        #[arg(allow_negative_numbers = true)]
        coeffs: Vec<String>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct ReportOpts {
    /// Emit the report as canonical JSON.
    #[arg(long)]
    json: bool,
    /// Include θ-domain and t-domain detail in text output.
    #[arg(long)]
    verbose: bool,
    /// Absolute override for the tangency threshold.
    #[arg(long)]
    eps_tangent: Option<f64>,
    /// Substitution scales below this route to the oracle.
    #[arg(long)]
    u_min: Option<f64>,
}

/// Error carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(msg: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: msg.into(),
        }
    }

    fn invalid(msg: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INVALID,
            message: msg.into(),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{e}");
                    return ExitCode::SUCCESS;
                }
                _ => EXIT_USAGE,
            };
            eprint!("{e}");
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("chebroot: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Classify { coeffs, opts } => cmd_classify(&coeffs, &opts),
        Command::Quartic { coeffs, opts } => cmd_quartic(&coeffs, &opts),
        Command::PlotF { coeffs, samples } => cmd_plot_f(&coeffs, samples),
        Command::Sweep { alpha, beta, gamma } => sweep::cmd_sweep(&alpha, &beta, &gamma),
        Command::Oracle { coeffs, json } => cmd_oracle(&coeffs, json),
    }
}

/// Parses fixed-arity coefficient lists: wrong arity is a usage error,
/// non-numeric or non-finite values are invalid input.
fn parse_coeffs(raw: &[String], arity: usize, what: &str) -> Result<Vec<f64>, Failure> {
    if raw.len() != arity {
        return Err(Failure::usage(format!(
            "{what} takes exactly {arity} coefficients (got {})",
            raw.len()
        )));
    }
    raw.iter()
        .map(|s| {
            let v: f64 = s
                .parse()
                .map_err(|_| Failure::invalid(format!("coefficient `{s}` is not a number")))?;
            if !v.is_finite() {
                return Err(Failure::invalid(format!("coefficient `{s}` is not finite")));
            }
            Ok(v)
        })
        .collect()
}

/// Resolves the tolerance configuration: flag > CHEBROOT_EPS_TANGENT > default.
fn build_config(opts: &ReportOpts) -> Result<Config, Failure> {
    let mut cfg = Config::default();
    if let Ok(raw) = std::env::var("CHEBROOT_EPS_TANGENT") {
        let v: f64 = raw.parse().map_err(|_| {
            Failure::invalid(format!("CHEBROOT_EPS_TANGENT=`{raw}` is not a number"))
        })?;
        cfg.eps_tangent = Some(v);
    }
    if let Some(eps) = opts.eps_tangent {
        cfg.eps_tangent = Some(eps);
    }
    if let Some(u_min) = opts.u_min {
        cfg.u_min = u_min;
    }
    Ok(cfg)
}

fn monic_quintic(c: &[f64]) -> Result<MonicQuintic, Failure> {
    if c[0] == 0.0 {
        return Err(Failure::invalid("leading coefficient a5 must be nonzero"));
    }
    MonicQuintic::new(
        c[1] / c[0],
        c[2] / c[0],
        c[3] / c[0],
        c[4] / c[0],
        c[5] / c[0],
    )
    .map_err(|e| Failure::invalid(e.to_string()))
}

fn cmd_classify(raw: &[String], opts: &ReportOpts) -> Result<(), Failure> {
    let c = parse_coeffs(raw, 6, "classify")?;
    let cfg = build_config(opts)?;
    let q = monic_quintic(&c)?;
    let report = classify_with(&q, &cfg);
    println!("{}", render_quintic(&report, opts.json, opts.verbose));
    Ok(())
}

fn cmd_quartic(raw: &[String], opts: &ReportOpts) -> Result<(), Failure> {
    let c = parse_coeffs(raw, 5, "quartic")?;
    let cfg = build_config(opts)?;
    if c[0] == 0.0 {
        return Err(Failure::invalid("leading coefficient a4 must be nonzero"));
    }
    let (b3, b2, b1, b0) = (c[1] / c[0], c[2] / c[0], c[3] / c[0], c[4] / c[0]);
    for v in [b3, b2, b1, b0] {
        if !v.is_finite() {
            return Err(Failure::invalid("normalized coefficients are not finite"));
        }
    }
    let d = chebroot::depress_quartic(b3, b2, b1, b0);
    if ![d.m, d.p, d.q].iter().all(|v| v.is_finite()) {
        return Err(Failure::invalid(
            "coefficients overflow the depression; rescale the polynomial",
        ));
    }
    let mut report = chebroot::classify_quartic_with(d.m, d.p, d.q, &cfg);
    // Report roots in the input variable.
    for r in report.roots.iter_mut() {
        *r -= d.shift;
    }
    println!(
        "{}",
        render_quartic(&report, d.shift, opts.json, opts.verbose)
    );
    Ok(())
}

fn cmd_plot_f(raw: &[String], samples: usize) -> Result<(), Failure> {
    let c = parse_coeffs(raw, 6, "plot-f")?;
    if samples < 2 {
        return Err(Failure::usage("--samples must be at least 2"));
    }
    let q = monic_quintic(&c)?;
    let dq = depress_with(&q, &Config::default());
    let r = reduce(&dq).map_err(|_| Failure {
        code: EXIT_NOT_APPLICABLE,
        message: format!(
            "m = {} is not negative, the cosine substitution does not apply; \
             use `chebroot oracle` for this polynomial",
            dq.m
        ),
    })?;
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    writeln!(out, "theta,f").ok();
    for i in 0..samples {
        let theta = PI * i as f64 / (samples - 1) as f64;
        writeln!(out, "{:.16e},{:.16e}", theta, r.eval_f(theta)).ok();
    }
    Ok(())
}

fn cmd_oracle(raw: &[String], json: bool) -> Result<(), Failure> {
    if raw.len() < 2 || raw.len() > 6 {
        return Err(Failure::usage(
            "oracle takes 2 to 6 coefficients (degree 1 to 5), descending",
        ));
    }
    let coeffs: Vec<f64> = raw
        .iter()
        .map(|s| {
            let v: f64 = s
                .parse()
                .map_err(|_| Failure::invalid(format!("coefficient `{s}` is not a number")))?;
            if !v.is_finite() {
                return Err(Failure::invalid(format!("coefficient `{s}` is not finite")));
            }
            Ok(v)
        })
        .collect::<Result<_, _>>()?;
    let ascending: Vec<f64> = coeffs.iter().rev().copied().collect();
    let p = chebroot::Poly::new(ascending);
    if p.is_zero() {
        return Err(Failure::invalid(
            "the zero polynomial has no root structure",
        ));
    }
    if p.degree() == 0 {
        return Err(Failure::invalid("degree 0 after trimming leading zeros"));
    }
    let roots = chebroot::real_roots(&p).map_err(|e| Failure::invalid(e.to_string()))?;
    println!("{}", render_oracle(&p, &roots, json));
    Ok(())
}
