//! The binary's exit statuses and files for the documented invocations.

use std::process::Command;

use clap::Parser;
use qflag::cli::{run, Cli};
use qflag::serialize::import_representation;

fn qflag(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_qflag")).args(args).output().expect("binary runs")
}

#[test]
fn verify_rmatrix_n3_passes() {
    let out = qflag(&["verify-rmatrix", "--n", "3"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("[PASS] Yang-Baxter"));
    assert!(!text.contains("[FAIL]"));
}

#[test]
fn irrep_writes_two_dimensional_module() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rep");
    let out = qflag(&["irrep", "--n", "2", "--sigma", "1", "--out", path.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(import_representation(&path).unwrap().dimension(), 2);
}

#[test]
fn negative_sigma_is_rejected_with_reason() {
    let out = qflag(&["irrep", "--n", "2", "--sigma", "-1"]);
    assert!(!out.status.success());
    assert!(String::from_utf8(out.stderr).unwrap().contains("non-negative"));
}

#[test]
fn usage_errors() {
    for args in [
        &["verify-frt", "--n", "2", "--lambda", "1,1"][..],
        &["verify-frt", "--n", "2", "--lambda", "q^"][..],
        &["verify-rmatrix", "--n", "5"][..],
        &["verify-flag", "--n", "1"][..],
        &["irrep", "--n", "3", "--sigma", "1"][..],
    ] {
        let out = qflag(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
    assert_eq!(qflag(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn structured_reports_parse() {
    let cli = Cli::try_parse_from(["qflag", "verify-frt", "--n", "2", "--sigma", "1", "--format", "structured"]).unwrap();
    let outcome = run(&cli.command).unwrap();
    assert!(outcome.success);
    let v: serde_json::Value = serde_json::from_str(&outcome.output).unwrap();
    assert!(v["checks"].as_array().is_some_and(|c| !c.is_empty()));
}

#[test]
fn irrep_output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    for p in [&a, &b] {
        assert!(qflag(&["irrep", "--n", "3", "--sigma", "1,1", "--out", p.to_str().unwrap()]).status.success());
    }
    assert_eq!(std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
}
