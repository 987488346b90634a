//! Behavior of the installed binary: exit codes, determinism, output formats.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_palatini"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn fixture_json() -> String {
    let sys = palatini::fixture::fixture_system(palatini::Field::rational());
    palatini::io::render_system(&sys).unwrap()
}

fn write_temp(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join("palatini-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn fixture_passes_with_exit_zero() {
    let out = run(&["fixture", "--no-timings"]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("1 X1*X2*X3*X4 -1 X0*X3*X4*X5"));
    assert!(text.ends_with("result: pass\n"));
}

#[test]
fn reports_are_byte_identical_without_timings() {
    for args in [
        vec!["fixture", "--no-timings"],
        vec!["random", "--seed", "1", "--count", "1", "--no-timings"],
        vec!["enumerative", "--no-timings", "--json"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "reruns differ for {args:?}");
    }
}

#[test]
fn json_reports_parse_and_carry_all_checks() {
    let out = run(&["fixture", "--json", "--no-timings"]);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["command"], "fixture");
    assert_eq!(doc["passed"], true);
    let checks = doc["checks"].as_array().unwrap();
    assert!(checks.len() >= 7);
    for c in checks {
        assert!(c["name"].is_string());
        assert!(c["computed"].is_string());
        // report-only checks have no expected value
        assert_eq!(
            c["expected"].is_string(),
            !c["report_only"].as_bool().unwrap()
        );
    }
}

#[test]
fn timings_are_present_by_default() {
    let out = run(&["fixture", "--json"]);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(doc["checks"][0]["ms"].is_number());
    let out = run(&["fixture", "--json", "--no-timings"]);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(doc["checks"][0].get("ms").is_none());
}

#[test]
fn non_prime_modulus_is_a_usage_error() {
    let out = run(&["random", "--seed", "1", "--prime", "4"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("not prime"), "stderr: {err}");
}

#[test]
fn verify_accepts_the_fixture_file() {
    let path = write_temp("fixture.json", &fixture_json());
    let out = run(&["verify", path.to_str().unwrap(), "--no-timings"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    // Same quartic the fixture command reports.
    assert!(text.contains("1 X1*X2*X3*X4 -1 X0*X3*X4*X5"));
    // Non-generic input: profile values are informational.
    assert!(text.contains("non-generic"));
}

#[test]
fn verify_locates_non_skew_entries() {
    let mut doc: serde_json::Value = serde_json::from_str(&fixture_json()).unwrap();
    doc["matrices"][2][0][1] = serde_json::json!(9);
    let path = write_temp("nonskew.json", &doc.to_string());
    let out = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(
        err.contains("matrix 2") && err.contains("(0,1)"),
        "stderr: {err}"
    );
}

#[test]
fn verify_rejects_dependent_matrices() {
    let mut doc: serde_json::Value = serde_json::from_str(&fixture_json()).unwrap();
    let m0 = doc["matrices"][0].clone();
    doc["matrices"][1] = m0;
    let path = write_temp("dependent.json", &doc.to_string());
    let out = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr)
        .unwrap()
        .contains("linearly dependent"));
}

#[test]
fn verify_reports_parse_position_on_malformed_json() {
    let path = write_temp("broken.json", "{\"field\": {\"type\": \"fp\",");
    let out = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("line"));
}

#[test]
fn verify_missing_file_is_a_usage_error() {
    let out = run(&["verify", "/nonexistent/system.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enumerative_table_passes_and_extends() {
    let out = run(&["enumerative", "--no-timings"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("degree of the scheme of lines: 736"));
    let out = run(&["enumerative", "--degree", "7", "--no-timings"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("k = 7: 642"));
}

#[test]
fn failed_checks_exit_one() {
    // Over F_2 no draw can pass the genericity certificate, so the report
    // fails deterministically.
    let out = run(&["random", "--seed", "1", "--prime", "2", "--no-timings"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("FAIL"));
    assert!(text.ends_with("result: FAIL\n"));
}

#[test]
fn random_over_q_checks_modular_consistency() {
    let out = run(&["random", "--seed", "1", "--field", "q", "--no-timings"]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("catalecticant rank over Q: 21"));
    assert!(text.contains("certificate agrees with the mod-p reduction: holds"));
}

#[test]
fn degenerate_system_file_is_reported_not_crashed() {
    let sys = palatini::fixture::degenerate_system(palatini::Field::rational());
    let path = write_temp(
        "degenerate.json",
        &palatini::io::render_system(&sys).unwrap(),
    );
    let out = run(&["verify", path.to_str().unwrap(), "--no-timings"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("all maximal minors vanish"));
}
