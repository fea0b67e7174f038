use std::io::Write;
use std::process::{Command, Output};

use rcbs::cli::AnalysisReport;
use rcbs::BoundId;

const FIXTURE: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures/cassels.csv");

fn rcbs(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rcbs"))
        .args(args)
        .env_remove("RCBS_TOL")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp_file(suffix: &str, content: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::Builder::new().suffix(suffix).tempfile().unwrap();
    f.write_all(content.as_bytes()).unwrap();
    f
}

#[test]
fn analyze_fixture_json() {
    let out = rcbs(&["analyze", FIXTURE, "--fit", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report = AnalysisReport::from_json(&stdout(&out)).unwrap();
    let thm22 = report.bound(BoundId::DiskProduct).unwrap();
    assert!((thm22.rhs() - 16.0 / 3.0).abs() < 1e-14);
    // Cassels ratio constant (M+m)²/(4mM) = 4/3, times (Σp·a·b)² = 4.
    let cassels = report.bound(BoundId::Cassels).unwrap();
    assert!((cassels.rhs() * 4.0 - 16.0 / 3.0).abs() < 1e-14);
    assert!(report.errata_notes.iter().any(|n| n.contains("klamkin_mclenaghan")));
}

#[test]
fn analyze_is_deterministic() {
    let first = rcbs(&["analyze", FIXTURE, "--format", "json"]);
    let second = rcbs(&["analyze", FIXTURE, "--format", "json"]);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn text_and_json_print_the_same_numbers() {
    let json = AnalysisReport::from_json(&stdout(&rcbs(&["analyze", FIXTURE, "--format", "json"]))).unwrap();
    let text = stdout(&rcbs(&["analyze", FIXTURE]));
    for b in &json.bounds {
        for x in b.lhs_chain.iter().chain(&b.rhs_chain) {
            let printed = format!("{x:.16e}");
            assert!(text.contains(&printed), "{printed} missing from text output");
            assert_eq!(printed.parse::<f64>().unwrap(), *x);
        }
    }
}

#[test]
fn disk_override_with_failing_hypothesis() {
    let out = rcbs(&["analyze", FIXTURE, "--alpha", "2", "--radius", "0.5", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report = AnalysisReport::from_json(&stdout(&out)).unwrap();
    for id in [BoundId::DiskLinear, BoundId::DiskProduct] {
        let b = report.bound(id).unwrap();
        assert!(!b.hypothesis_ok);
        assert!(b.notes.iter().any(|n| n.contains("index 0")));
    }
}

#[test]
fn band_override_and_complex_arguments() {
    let out = rcbs(&["analyze", FIXTURE, "--gamma", "1,0", "--Gamma", "3,0", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report = AnalysisReport::from_json(&stdout(&out)).unwrap();
    assert_eq!(report.parameters.band_source, "override");
    assert!((report.bound(BoundId::BandProduct).unwrap().rhs() - 16.0 / 3.0).abs() < 1e-14);
}

#[test]
fn literal_forms_exit_with_two() {
    let data = temp_file(".csv", "re_a,re_b,weight\n0.4,1,1\n0.1,1,2\n");
    let path = data.path().to_str().unwrap();
    assert_eq!(rcbs(&["analyze", path]).status.code(), Some(0));
    let out = rcbs(&["analyze", path, "--km-variant", "literal"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("klamkin_mclenaghan"));
}

#[test]
fn half_form_is_reported() {
    let out = rcbs(&["analyze", FIXTURE, "--thm31-form", "half", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report = AnalysisReport::from_json(&stdout(&out)).unwrap();
    assert!((report.bound(BoundId::BandProduct).unwrap().rhs() - 32.0 / 3.0).abs() < 1e-13);
    assert!(report.errata_notes.iter().any(|n| n.contains("2·Re")));
}

#[test]
fn json_input() {
    let data = temp_file(".json", r#"{"a":[[0,1],[1,1]],"b":[[1,0],[0.5,-0.5]],"w":[2,1]}"#);
    let out = rcbs(&["analyze", data.path().to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report = AnalysisReport::from_json(&stdout(&out)).unwrap();
    assert_eq!(report.dataset.n, 2);
    assert_eq!(report.dataset.weight_sum, 3.0);
    assert!(!report.dataset.real_only);
}

#[test]
fn input_errors_exit_with_one() {
    let empty = temp_file(".csv", "");
    let out = rcbs(&["analyze", empty.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("parse error"));

    let negative = temp_file(".csv", "re_a,re_b,weight\n1,1,-1\n");
    let out = rcbs(&["analyze", negative.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("invariant"));

    assert_eq!(rcbs(&["analyze", "/nonexistent/data.csv"]).status.code(), Some(1));
}

#[test]
fn tolerance_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_rcbs"))
        .args(["analyze", FIXTURE, "--format", "json"])
        .env("RCBS_TOL", "1e-6")
        .output()
        .unwrap();
    let report = AnalysisReport::from_json(&stdout(&out)).unwrap();
    assert_eq!(report.verify_tol, 1e-6);
}

#[test]
fn witness_commands() {
    let out = rcbs(&["witness", "thm61"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("limit gap"));

    let out = rcbs(&["witness", "thm21"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("2.0000000000000000e0"));
    assert_eq!(text.lines().count(), 4);

    let out = rcbs(&["witness", "thm62", "--sweep", "1e-6,0.5,8", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let sweep: rcbs::SweepResult = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(sweep.estimates.len(), 8);

    // A schedule that stops far from zero does not reach the constant.
    assert_eq!(rcbs(&["witness", "thm24", "--sweep", "0.5,0.9,3"]).status.code(), Some(2));

    let out = rcbs(&["witness", "nosuch"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown theorem"));
}
