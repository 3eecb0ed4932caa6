use std::process::Command;

use biquat_cli::format::{format_biquat, parse_biquat, Style};
use biquat_cli::{run_args, EXIT_OK, EXIT_REJECTED, EXIT_USAGE, EXIT_VERIFY_FAILED};
use biquat_core::BiQuat;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn cli_with_stdin(args: &[&str], stdin: &str) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("biquat").chain(args.iter().copied());
    let code = run_args(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn cli(args: &[&str]) -> (i32, String, String) {
    cli_with_stdin(args, "")
}

/// Finite doubles drawn from every exponent range, plus signed zeros.
fn any_finite<R: Rng>(rng: &mut R) -> f64 {
    loop {
        let x = match rng.random_range(0..4) {
            0 => f64::from_bits(rng.random()),
            1 => rng.random::<f64>() * 2.0 - 1.0,
            2 => rng.random_range(-1000i32..1000) as f64,
            _ => [0.0, -0.0, f64::MIN_POSITIVE, f64::MAX, -5e-324][rng.random_range(0..5)],
        };
        if x.is_finite() {
            return x;
        }
    }
}

fn same_bits(a: BiQuat, b: BiQuat) -> bool {
    a.re().map(f64::to_bits) == b.re().map(f64::to_bits) && a.im().map(f64::to_bits) == b.im().map(f64::to_bits)
}

#[test]
fn plain_and_json_round_trip_ten_thousand_values() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..10_000 {
        let q = BiQuat::from_parts(
            std::array::from_fn(|_| any_finite(&mut rng)),
            std::array::from_fn(|_| any_finite(&mut rng)),
        );
        for style in [Style::Plain, Style::Json] {
            let text = format_biquat(q, style);
            let back = parse_biquat(&text).unwrap_or_else(|e| panic!("{text}: {e}"));
            assert!(same_bits(q, back), "{text}");
        }
    }
}

proptest! {
    #[test]
    fn round_trip_prop(re in prop::array::uniform4(-1e6f64..1e6), im in prop::array::uniform4(-1e6f64..1e6)) {
        let q = BiQuat::from_parts(re, im);
        prop_assert!(same_bits(q, parse_biquat(&format_biquat(q, Style::Plain)).unwrap()));
    }

    #[test]
    fn parser_never_panics(s in "[0-9ie+\\-., ]{0,40}") {
        let _ = parse_biquat(&s);
    }
}

#[test]
fn entangle_example_one() {
    let (code, out, _) = cli(&[
        "entangle",
        "--p",
        "0.70710678118,0,0.70710678118,0",
        "--q",
        "0.70710678118i,-0.70710678118i,0,0",
    ]);
    assert_eq!(code, EXIT_OK);
    let image = out.lines().next().unwrap().strip_prefix("Λ(q) = ").unwrap();
    let got = parse_biquat(image).unwrap();
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let want = BiQuat::from_parts([0.0; 4], [0.0, -s, s, 0.0]);
    assert!((got - want).max_abs() <= 1e-9);
    assert!(out.contains("C: 0 -> 0.99999999"));
}

#[test]
fn entangle_json_output() {
    let s = "0.7071067811865476";
    let (code, out, _) = cli(&[
        "--json",
        "entangle",
        "--p",
        &format!("{s},0,{s},0"),
        "--q",
        &format!("{s}i,-{s}i,0,0"),
    ]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["admissible"], true);
    let after = v["outcome"]["concurrence_after"].as_f64().unwrap();
    assert!((after - 1.0).abs() <= 1e-12);
}

#[test]
fn check_rejects_basis_unit() {
    let (code, out, _) = cli(&["check", "--p", "0,1,0,0", "--q", "1,0,0,0"]);
    assert_eq!(code, EXIT_REJECTED);
    assert!(out.contains("R2 (p not a basis unit):   FAIL"));
    let (code, _, _) = cli(&["entangle", "--p", "0,1,0,0", "--q", "1,0,0,0"]);
    assert_eq!(code, EXIT_REJECTED);
}

#[test]
fn check_accepts_admissible_pair() {
    let (code, out, _) = cli(&["check", "--p", "0.6,0,0.8,0", "--q", "0.6,0.8,0,0"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.ends_with("admissible\n"));
}

#[test]
fn verify_theorem_passes() {
    let (code, out, _) = cli(&["verify-theorem", "--samples", "1000", "--seed", "7"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("8/8 cases pass"));
}

#[test]
fn verify_theorem_with_zero_tolerance_fails() {
    let (code, out, _) = cli(&["verify-theorem", "--samples", "50", "--tol", "0"]);
    assert_eq!(code, EXIT_VERIFY_FAILED);
    assert!(!out.contains("8/8 cases pass"));
}

#[test]
fn verify_examples_flags_sign() {
    let (code, out, _) = cli(&["verify-examples"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("example 2: SIGN DISCREPANCY"));
    let (_, json, _) = cli(&["--json", "verify-examples"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["examples"][1]["sign_mismatch_components"], serde_json::json!([4]));
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        &["concurrence", "1,2,3"][..],
        &["entangle", "--p", "1,0,0,0"],
        &["frobnicate"],
        &["verify-theorem", "--samples", "0"],
        &["sweep", "--grid", "1"],
        &["rotate", "--map", "sideways", "--q", "1,0,0,0", "--x", "1,0,0,0"],
        &["rotate", "--map", "left", "--q", "2,0,0,0", "--x", "1,0,0,0"],
        &["concurrence", "1,1,0,0"],
        &["polar", "1i,1,0,0"],
    ] {
        let (code, _, err) = cli(args);
        assert_eq!(code, EXIT_USAGE, "{args:?}");
        assert!(!err.is_empty());
    }
    let (_, _, err) = cli(&["concurrence", "1,2,3"]);
    assert_eq!(err, "error: expected 4 components, found 3\n");
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(cli(&["--help"]).0, EXIT_OK);
    assert_eq!(cli(&["--version"]).0, EXIT_OK);
}

#[test]
fn concurrence_reads_stdin() {
    let (code, out, _) = cli_with_stdin(&["concurrence", "-"], "0.6, 0, 0, 0.8\n");
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.trim().parse::<f64>().unwrap(), 0.96);
}

#[test]
fn rotate_maps() {
    let s = "0.7071067811865476";
    let (code, out, _) = cli(&[
        "rotate",
        "--map",
        "conj",
        "--q",
        &format!("{s},0,0,{s}"),
        "--x",
        "0,1,0,0",
    ]);
    assert_eq!(code, EXIT_OK);
    let got = parse_biquat(out.trim()).unwrap();
    assert!((got - BiQuat::SIGMA_Y.scale(num_complex::Complex64::new(0.0, -1.0))).max_abs() < 1e-15);

    let (code, out, _) = cli(&[
        "rotate",
        "--map",
        "left",
        "--q",
        &format!("{s},{s},0,0"),
        "--x",
        "0,0,1,0",
    ]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.trim(), "0, 0, 0.7071067811865476, 0.7071067811865476");

    let (code, out, _) = cli(&["rotate", "--map", "lorentz", "--q", "1,0,0,0", "--x", "1+2i,0,0,-3i"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.trim(), "1+2i, 0, 0, -3i");

    for map in ["right", "psi", "mu"] {
        assert_eq!(
            cli(&["rotate", "--map", map, "--q", "1,0,0,0", "--x", "0,1,0,0"]).0,
            EXIT_OK
        );
    }
}

#[test]
fn polar_output() {
    let (code, out, _) = cli(&["polar", "1,1,0,0"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("angle = 0.7853981633974483"));
    let (code, out, _) = cli(&["--json", "polar", "-3,0,0,0"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("\"degenerate_axis\": true"));
    let (code, out, _) = cli(&["polar", "2,1i,0,0"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("angle = "));
}

#[test]
fn sweep_writes_csv_with_maximal_row() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("grid.csv");
    let (code, out, _) = cli(&["sweep", "--grid", "5", "--out", path.to_str().unwrap(), "--case", "3"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("wrote 625 rows"));
    let mut reader = csv::Reader::from_path(&path).unwrap();
    assert_eq!(
        reader.headers().unwrap(),
        vec!["alpha", "beta", "a_i", "a_j", "C", "maximal"]
    );
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let centre = reader
        .records()
        .map(|r| r.unwrap())
        .find(|r| {
            let near = |k: usize| (parse_biquat(&format!("{},0,0,0", &r[k])).unwrap().c1.re - s).abs() < 1e-15;
            near(0) && near(1) && near(2) && near(3) && !r[0].contains('i') && !r[1].contains('i')
        })
        .expect("grid contains the all-1/√2 point");
    assert!((centre[4].parse::<f64>().unwrap() - 1.0).abs() <= 1e-9);
    assert_eq!(&centre[5], "true");
}

#[test]
fn sweep_to_stdout_is_deterministic() {
    let a = cli(&["sweep", "--grid", "3"]);
    let b = cli(&["sweep", "--grid", "3"]);
    assert_eq!(a, b);
    assert_eq!(a.1.lines().count(), 82);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_biquat");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code().unwrap();
    assert_eq!(status(&["verify-examples"]), 0);
    assert_eq!(status(&["concurrence", "1,2,3"]), 1);
    assert_eq!(status(&["check", "--p", "0,1,0,0", "--q", "1,0,0,0"]), 2);
    assert_eq!(status(&["verify-theorem", "--samples", "5", "--tol", "0"]), 3);
}
