//! The `qseries` binary: verbs, exit codes and deterministic JSON.

use std::process::{Command, Output};

use qseries::catalog::{CaseInfo, Report};

fn qseries(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qseries")).args(args).output().expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    qseries(args).status.code().expect("exit code")
}

#[test]
fn list_shows_cases() {
    let out = qseries(&["list"]);
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().contains("thm1/singh"));
}

#[test]
fn list_json_filters_by_tag() {
    let out = qseries(&["list", "--json", "--tag", "classical"]);
    let infos: Vec<CaseInfo> = serde_json::from_slice(&out.stdout).unwrap();
    let ids: Vec<&str> = infos.iter().map(|i| i.id.as_str()).collect();
    assert!(ids.contains(&"6psi6") && ids.contains(&"qbin/a0"));
    assert!(!ids.contains(&"thm1/singh"));
}

#[test]
fn run_thm1_with_z_override() {
    let out = qseries(&["run", "thm1", "--param", "z=17", "--order", "20", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let reports: Vec<Report> = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(reports.len(), 4);
    assert!(reports.iter().all(|r| r.bindings["z"] == "17" && r.matched_order == Some(20)));
}

#[test]
fn exit_codes_are_distinct() {
    assert_eq!(code(&["run", "thm1", "--param", "z=3"]), 3);
    assert_eq!(code(&["run", "unknown-case"]), 2);
    assert_eq!(code(&["run", "qbin", "--param", "a=1.5"]), 2);
    assert_eq!(code(&["run", "qbin", "--param", "zz=2"]), 2);
    assert_eq!(code(&["run", "qbin", "--param", "a"]), 2);
    assert_eq!(code(&["run", "qbin", "--param", "z=3"]), 3);
}

#[test]
fn seeded_json_is_byte_identical() {
    let args = ["run", "--tag", "f", "--order", "8", "--seed", "11", "--samples", "2", "--json"];
    let first = qseries(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, qseries(&args).stdout);
    let reports: Vec<Report> = serde_json::from_slice(&first.stdout).unwrap();
    let rendered = serde_json::to_string_pretty(&reports).unwrap() + "\n";
    assert_eq!(rendered.as_bytes(), first.stdout.as_slice());
}
