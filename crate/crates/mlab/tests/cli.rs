//! Process-level tests of the mlab binary: exit codes, output formats and
//! the series dump grammar.

use std::process::{Command, Output};

fn mlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn compute_mahler_g_zero() {
    let out = mlab(&["compute", "mahler", "--family", "g", "--alpha", "0"]);
    assert!(out.status.success());
    let v: f64 = stdout(&out).trim().parse().unwrap();
    assert!(v.abs() < 1e-9, "g(0) = {v}");
}

#[test]
fn compute_lattice_cube_single_term() {
    let out = mlab(&[
        "compute", "lattice", "--b", "1", "--c", "5", "--method", "cube", "--n", "0",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "1.000000000000000");
}

#[test]
fn compute_lattice_integral_matches_lvalue() {
    let out = mlab(&["compute", "lattice", "--b", "2", "--c", "3"]);
    let f23: f64 = stdout(&out).trim().parse().unwrap();
    let out = mlab(&["compute", "lvalue", "--conductor", "24"]);
    let l24: f64 = stdout(&out).trim().parse().unwrap();
    assert!((f23 - l24).abs() < 1e-9, "{f23} vs {l24}");
}

#[test]
fn compute_hyper_log_series() {
    let out = mlab(&[
        "compute", "hyper", "--upper", "1,1", "--lower", "2", "--z", "0.5",
    ]);
    let v: f64 = stdout(&out).trim().parse().unwrap();
    assert!((v - 2.0 * 2.0f64.ln()).abs() < 1e-12);
}

#[test]
fn series_phi_expansion() {
    let out = mlab(&["series", "--expr", "phi(q)", "--terms", "10"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines, vec!["0/1\t1", "1/1\t2", "4/1\t2", "9/1\t2"]);
}

#[test]
fn series_unit_quotient() {
    let out = mlab(&["series", "--expr", "eta(q)/eta(q)", "--terms", "5"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "0/1\t1");
}

#[test]
fn series_modular_equation_vanishes() {
    let out = mlab(&[
        "series",
        "--expr",
        "3*eta(q^6)^4 + b(q)*c(q^12) - b(q^4)*c(q^3)",
        "--terms",
        "100",
    ]);
    assert!(out.status.success());
    // all coefficients cancel: nothing to print
    assert_eq!(stdout(&out).trim(), "");
}

#[test]
fn series_parse_error_exits_2() {
    let out = mlab(&["series", "--expr", "zeta(q)", "--terms", "5"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("parse error"), "{err}");
}

#[test]
fn usage_error_exits_2() {
    let out = mlab(&["compute", "lattice", "--b", "2"]); // missing --c
    assert_eq!(out.status.code(), Some(2));
    let out = mlab(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_conductor_exits_2() {
    let out = mlab(&["compute", "lvalue", "--conductor", "11"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn out_of_domain_route_exits_2() {
    // the hypergeometric g route refuses alpha <= 8
    let out = mlab(&[
        "compute", "mahler", "--family", "g", "--alpha", "5", "--route", "hyper",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_single_id_json_roundtrip() {
    let out = mlab(&["verify", "--id", "QS_PSI_ETA", "--format", "json"]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    let rendered = serde_json::to_string(&parsed).unwrap();
    let reparsed: serde_json::Value = serde_json::from_str(&rendered).unwrap();
    assert_eq!(parsed, reparsed);
    assert_eq!(parsed[0]["status"], "pass");
    assert_eq!(parsed[0]["id"], "QS_PSI_ETA");
    assert!(parsed[0]["reference"].as_str().is_some());
}

#[test]
fn verify_unknown_id_exits_2() {
    let out = mlab(&["verify", "--id", "NO_SUCH_RECORD"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_negative_control_exits_1() {
    let out = mlab(&["verify", "--id", "NEGCTRL_PHI_PSI"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_tag_selection_csv() {
    let out = mlab(&["verify", "--tag", "wcurve", "--format", "csv"]);
    assert!(out.status.success(), "wcurve suite should pass");
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "id,description,reference,lhs,rhs,abs_err,tol,status,seconds"
    );
    assert!(text.lines().count() >= 7);
}

#[test]
fn verify_tolerance_override() {
    // an impossible tolerance flips a passing record to fail
    let out = mlab(&["verify", "--id", "G_HALF", "--tolerance", "1e-30"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn list_catalog() {
    let out = mlab(&["list"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("M8_M2_F23"));
    assert!(text.contains("identities"));
    let out = mlab(&["list", "--tag", "boyd", "--format", "json"]);
    let parsed: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert!(parsed.as_array().unwrap().len() >= 2);
}

#[test]
fn parallel_verify_is_deterministic() {
    let a = mlab(&[
        "verify",
        "--tag",
        "exact",
        "--parallelism",
        "1",
        "--format",
        "csv",
    ]);
    let b = mlab(&[
        "verify",
        "--tag",
        "exact",
        "--parallelism",
        "8",
        "--format",
        "csv",
    ]);
    // identical pass/fail sets and diffs; only the timing column may differ
    let strip = |s: &Output| -> Vec<String> {
        stdout(s)
            .lines()
            .map(|l| {
                l.rsplit_once(',')
                    .map(|(head, _)| head.to_string())
                    .unwrap_or_default()
            })
            .collect()
    };
    assert_eq!(strip(&a), strip(&b));
}
