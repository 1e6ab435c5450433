//! End-to-end tests of the `chebroot` binary: output contracts, exit codes,
//! JSON canonicality.

use std::process::{Command, Output};

fn chebroot(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chebroot"))
        .args(args)
        .env_remove("CHEBROOT_EPS_TANGENT")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn classify_text_output_perfect_quintic() {
    let out = chebroot(&["classify", "1", "0", "-5", "0", "5", "0"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("n_real: 5"));
    assert!(text.contains("method: TrigMethod"));
    assert!(text.contains("scenario: Thm1"));
}

#[test]
fn classify_json_golden_fields() {
    let out = chebroot(&["classify", "1", "0", "-5", "0", "1", "-5", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["n_real"], 3);
    assert_eq!(v["n_int"], 1);
    assert_eq!(v["n_ext_plus"], 1);
    assert_eq!(v["n_ext_minus"], 1);
    assert_eq!(v["f0"], -5.5);
    assert_eq!(v["fpi"], 0.5);
    assert_eq!(v["scenario"], "Thm2(b)");
    assert_eq!(v["reduction"]["beta"], -4.0);
    assert_eq!(v["reduction"]["gamma"], -2.5);
}

#[test]
fn classify_json_round_trips_byte_identical() {
    for args in [
        ["classify", "1", "0", "-5", "0", "5", "0", "--json"].as_slice(),
        ["classify", "1", "0", "-5", "1", "2", "5", "--json"].as_slice(),
        ["classify", "1", "0", "0", "0", "0", "-1", "--json"].as_slice(),
        ["classify", "1", "2", "-7", "0.5", "-3", "9", "--json"].as_slice(),
    ] {
        let emitted = stdout(&chebroot(args));
        let emitted = emitted.trim();
        let parsed: chebroot::ClassificationReport = serde_json::from_str(emitted).unwrap();
        let reserialized = serde_json::to_string(&parsed).unwrap();
        assert_eq!(
            emitted, reserialized,
            "round trip changed bytes for {args:?}"
        );
    }
}

#[test]
fn quartic_and_oracle_json_round_trip() {
    let emitted = stdout(&chebroot(&[
        "quartic", "1", "3", "-2", "0.5", "-3", "--json",
    ]));
    let emitted = emitted.trim();
    let parsed: chebroot::QuarticReport = serde_json::from_str(emitted).unwrap();
    assert_eq!(emitted, serde_json::to_string(&parsed).unwrap());

    let emitted = stdout(&chebroot(&[
        "oracle", "1", "0", "-5", "0", "1", "-5", "--json",
    ]));
    let emitted = emitted.trim();
    let v: serde_json::Value = serde_json::from_str(emitted).unwrap();
    // Field order and float rendering survive an untyped round trip too,
    // because keys are emitted in declaration order and parsing preserves it.
    assert_eq!(v["n_distinct"], 3);
}

#[test]
fn classify_deterministic_across_runs() {
    let first = stdout(&chebroot(&[
        "classify", "1", "0", "-5", "0", "1", "-5", "--json",
    ]));
    for _ in 0..3 {
        let again = stdout(&chebroot(&[
            "classify", "1", "0", "-5", "0", "1", "-5", "--json",
        ]));
        assert_eq!(first, again);
    }
}

#[test]
fn classify_shifted_quintic_reports_input_variable_roots() {
    // Q(z) = P(z + 1) for the all-real quintic P: roots shift down by 1.
    let out = chebroot(&["classify", "1", "5", "5", "-5", "-5", "1", "--json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["n_real"], 5);
    assert_eq!(v["reduction"]["shift"], 1.0);
    let roots: Vec<f64> = v["roots"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_f64().unwrap())
        .collect();
    let s5 = 5.0_f64.sqrt();
    let outer = ((5.0 + s5) / 2.0).sqrt();
    let inner = ((5.0 - s5) / 2.0).sqrt();
    for (got, t) in roots.iter().zip([-outer, -inner, 0.0, inner, outer]) {
        assert!((got - (t - 1.0)).abs() < 1e-9, "{got} vs {}", t - 1.0);
    }
}

#[test]
fn quartic_m_nonnegative_falls_back() {
    let out = chebroot(&["quartic", "1", "0", "1", "0", "-1", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["method"], "OracleFallback");
    assert_eq!(v["degenerate"][0], "MethodNotApplicable");
    assert_eq!(v["n_real"], 2);
}

#[test]
fn plot_f_default_sample_count() {
    let out = chebroot(&["plot-f", "1", "0", "-5", "0", "5", "0"]);
    assert_eq!(stdout(&out).lines().count(), 2002); // header + 2001 rows
}

#[test]
fn classify_normalizes_leading_coefficient() {
    // 2z⁵ − 10z³ + 10z is the perfect quintic scaled by 2.
    let out = chebroot(&["classify", "2", "0", "-10", "0", "10", "0", "--json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["n_real"], 5);
    assert_eq!(v["reduction"]["u"], 2.0);
}

#[test]
fn classify_m_zero_falls_back() {
    let out = chebroot(&["classify", "1", "0", "0", "0", "0", "-1", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["n_real"], 1);
    assert_eq!(v["method"], "OracleFallback");
    assert_eq!(v["degenerate"][0], "MethodNotApplicable");
    assert_eq!(v["scenario"], serde_json::Value::Null);
}

#[test]
fn exit_codes() {
    // wrong arity → usage (64)
    assert_eq!(
        chebroot(&["classify", "1", "0", "-5"]).status.code(),
        Some(64)
    );
    // non-numeric → invalid input (2)
    let args = ["classify", "1", "0", "-5", "0", "5", "x"];
    assert_eq!(chebroot(&args).status.code(), Some(2));
    // zero leading coefficient → invalid input (2)
    let args = ["classify", "0", "1", "-5", "0", "5", "0"];
    assert_eq!(chebroot(&args).status.code(), Some(2));
    // plot-f without a substitution → 3
    let args = ["plot-f", "1", "0", "0", "0", "0", "-1"];
    assert_eq!(chebroot(&args).status.code(), Some(3));
    // unknown flag → usage (64)
    assert_eq!(chebroot(&["classify", "--bogus"]).status.code(), Some(64));
    // oracle on the zero polynomial → invalid input (2)
    assert_eq!(chebroot(&["oracle", "0", "0"]).status.code(), Some(2));
    // success → 0
    assert_eq!(
        chebroot(&["classify", "1", "0", "-5", "0", "5", "0"])
            .status
            .code(),
        Some(0)
    );
}

#[test]
fn plot_f_five_samples() {
    let out = chebroot(&["plot-f", "1", "0", "-5", "0", "5", "0", "--samples", "5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 6);
    assert_eq!(lines[0], "theta,f");
    let parse_row = |line: &str| -> (f64, f64) {
        let mut it = line.split(',');
        (
            it.next().unwrap().parse().unwrap(),
            it.next().unwrap().parse().unwrap(),
        )
    };
    let (t0, f0) = parse_row(lines[1]);
    assert_eq!(t0, 0.0);
    assert_eq!(f0, 1.0); // α + β + 1 + γ
    let (t1, f1) = parse_row(lines[2]);
    assert!((t1 - std::f64::consts::FRAC_PI_4).abs() < 1e-15);
    assert!((f1 - (-std::f64::consts::FRAC_1_SQRT_2)).abs() < 1e-12); // cos(5π/4)
    let (t4, f4) = parse_row(lines[5]);
    assert!((t4 - std::f64::consts::PI).abs() < 1e-15);
    assert_eq!(f4, -1.0);
}

#[test]
fn plot_f_all_positive_for_one_root_example() {
    let out = chebroot(&["plot-f", "1", "0", "-5", "1", "2", "5", "--samples", "101"]);
    let text = stdout(&out);
    for line in text.lines().skip(1) {
        let f: f64 = line.split(',').nth(1).unwrap().parse().unwrap();
        assert!(f > 0.0);
    }
}

#[test]
fn sweep_single_points() {
    let out = chebroot(&[
        "sweep", "--alpha", "0:0:1", "--beta", "0:0:1", "--gamma", "0:0:1",
    ]);
    let text = stdout(&out);
    assert_eq!(
        text.lines().next().unwrap(),
        "alpha,beta,gamma,n_int,f0,fpi"
    );
    assert_eq!(text.lines().nth(1).unwrap(), "0,0,0,5,1,-1");

    let out = chebroot(&[
        "sweep",
        "--alpha",
        "0:0:1",
        "--beta",
        "-4:-4:1",
        "--gamma",
        "-2.5:-2.5:1",
    ]);
    assert_eq!(stdout(&out).lines().nth(1).unwrap(), "0,-4,-2.5,1,-5.5,0.5");

    // γ beyond the global bound |f − γ| ≤ |α| + |β| + 1 forces f > 0.
    let out = chebroot(&[
        "sweep", "--alpha", "0:0:1", "--beta", "0:0:1", "--gamma", "10:10:1",
    ]);
    assert_eq!(stdout(&out).lines().nth(1).unwrap(), "0,0,10,0,11,9");
}

#[test]
fn sweep_grid_order_and_size() {
    let out = chebroot(&[
        "sweep", "--alpha", "0:1:2", "--beta", "0:1:2", "--gamma", "0:1:2",
    ]);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 1 + 8);
    // γ varies fastest, α slowest.
    assert!(lines[1].starts_with("0,0,0,"));
    assert!(lines[2].starts_with("0,0,1,"));
    assert!(lines[3].starts_with("0,1,0,"));
    assert!(lines[5].starts_with("1,0,0,"));
}

#[test]
fn sweep_agrees_with_classify() {
    // For a quintic with known (α, β, γ), a single-point sweep reproduces
    // the classifier's interior count.
    let out = chebroot(&["classify", "1", "0", "-5", "1", "2", "5", "--json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    let (a, b, g) = (
        v["reduction"]["alpha"].as_f64().unwrap(),
        v["reduction"]["beta"].as_f64().unwrap(),
        v["reduction"]["gamma"].as_f64().unwrap(),
    );
    let sweep_args = [
        "sweep".to_string(),
        "--alpha".into(),
        format!("{a}:{a}:1"),
        "--beta".into(),
        format!("{b}:{b}:1"),
        "--gamma".into(),
        format!("{g}:{g}:1"),
    ];
    let refs: Vec<&str> = sweep_args.iter().map(|s| s.as_str()).collect();
    let out = chebroot(&refs);
    let text = stdout(&out);
    let n_int: u64 = text
        .lines()
        .nth(1)
        .unwrap()
        .split(',')
        .nth(3)
        .unwrap()
        .parse()
        .unwrap();
    assert_eq!(n_int, v["n_int"].as_u64().unwrap());
}

#[test]
fn quartic_json_biquadratics() {
    let out = chebroot(&["quartic", "1", "0", "-2", "0", "0.5", "--json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["n_real"], 4);
    let out = chebroot(&["quartic", "1", "0", "-2", "0", "5", "--json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["n_real"], 0);
    let out = chebroot(&["quartic", "1", "0", "-2", "0", "-3", "--json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["n_real"], 2);
}

#[test]
fn quartic_undoes_internal_depression() {
    // (z − 1)(z − 2)(z − 3)(z − 4) = z⁴ − 10z³ + 35z² − 50z + 24.
    let out = chebroot(&["quartic", "1", "-10", "35", "-50", "24", "--json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["n_real"], 4);
    let roots: Vec<f64> = v["roots"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_f64().unwrap())
        .collect();
    for (got, want) in roots.iter().zip([1.0, 2.0, 3.0, 4.0]) {
        assert!((got - want).abs() < 1e-8, "{got} vs {want}");
    }
}

#[test]
fn oracle_reports_multiplicity() {
    let out = chebroot(&["oracle", "1", "0", "0", "0", "0", "0", "--json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["n_distinct"], 1);
    assert_eq!(v["multiplicities"][0], 5);
    assert_eq!(v["square_free"], false);

    let out = chebroot(&["oracle", "1", "0", "-5", "0", "5", "0", "--json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["n_distinct"], 5);
}

#[test]
fn oracle_accepts_low_degrees() {
    let out = chebroot(&["oracle", "2", "-4"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("distinct real roots: 1 (degree 1)"));
    assert!(stdout(&out).contains("roots: 2"));
}

#[test]
fn eps_tangent_env_override() {
    // An absurdly large threshold makes every node value look tangent,
    // forcing the oracle route.
    let out = Command::new(env!("CARGO_BIN_EXE_chebroot"))
        .args(["classify", "1", "0", "-5", "0", "1", "-5", "--json"])
        .env("CHEBROOT_EPS_TANGENT", "1e6")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["method"], "OracleFallback");
    assert_eq!(v["n_real"], 3);
    // An invalid value is rejected.
    let out = Command::new(env!("CARGO_BIN_EXE_chebroot"))
        .args(["classify", "1", "0", "-5", "0", "1", "-5"])
        .env("CHEBROOT_EPS_TANGENT", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    // The --eps-tangent flag wins over the environment.
    let out = Command::new(env!("CARGO_BIN_EXE_chebroot"))
        .args([
            "classify",
            "1",
            "0",
            "-5",
            "0",
            "1",
            "-5",
            "--json",
            "--eps-tangent",
            "1e-9",
        ])
        .env("CHEBROOT_EPS_TANGENT", "1e6")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["method"], "TrigMethod");
}
