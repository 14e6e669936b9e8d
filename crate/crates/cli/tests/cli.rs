//! End-to-end tests of the `comspec` binary: output formats, JSON
//! round-tripping, exit codes, graph export.

use std::process::{Command, Output};

fn comspec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_comspec"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn analyze_d8_json_round_trips_byte_identically() {
    let out = comspec(&["analyze", "D:8", "--format", "json"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let report: comspec::verify::AnalysisReport = serde_json::from_str(&text).unwrap();
    assert!(report.super_integral);
    assert_eq!(report.centralizer_count, 4);
    let mut reserialized = serde_json::to_string_pretty(&report).unwrap();
    reserialized.push('\n');
    assert_eq!(reserialized, text);
}

#[test]
fn analyze_s4_text_shows_the_residual() {
    let out = comspec(&["analyze", "S:4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("residual=9,-48,70,-16,1"), "{text}");
    assert!(text.contains("super integral   no"), "{text}");
}

#[test]
fn analyze_rejects_bad_descriptors_with_exit_2() {
    let out = comspec(&["analyze", "D:7"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("D:7"), "{err}");

    let out = comspec(&["analyze", "PQ:3,5"]);
    assert_eq!(out.status.code(), Some(2));

    // abelian groups have no commuting graph
    let out = comspec(&["analyze", "Z:6"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_flag_is_a_usage_error() {
    let out = comspec(&["analyze", "D:8", "--frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_single_theorem_and_exit_codes() {
    let out = comspec(&["verify", "quaternion-cor"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("7 match"));

    let out = comspec(&["verify", "dihedral-cor", "--range", "m=3..6"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("4 instances"), "{text}");
    assert!(text.contains("dihedral-cor-odd-q-stray-term"), "{text}");

    let out = comspec(&["verify", "no-such-theorem"]);
    assert_eq!(out.status.code(), Some(2));

    let out = comspec(&["verify", "dihedral-cor", "--range", "m=oops"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_all_is_clean_and_reports_the_errata() {
    let out = comspec(&["verify", "all"]);
    assert!(out.status.success(), "verify all must exit 0");
    let text = stdout(&out);
    assert!(text.contains("summary: PASS"), "{text}");
    for e in [
        "dihedral-cor-odd-q-stray-term",
        "p-cubed-cor-l-exponent",
        "gl-prop-q-sign-term",
        "s4-q-spec-five-term",
    ] {
        assert!(text.contains(e), "missing {e} in:\n{text}");
    }
}

#[test]
fn verify_json_round_trips() {
    let out = comspec(&["verify", "order16-lemma", "--format", "json"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let sweep: comspec::verify::SweepSummary = serde_json::from_str(&text).unwrap();
    assert_eq!(sweep.reports.len(), 6);
    let mut reserialized = serde_json::to_string_pretty(&sweep).unwrap();
    reserialized.push('\n');
    assert_eq!(reserialized, text);
}

#[test]
fn census_on_explicit_groups() {
    let out = comspec(&["census", "D:8", "D:6", "Q:8"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("3 groups"), "{text}");
    assert!(text.contains("all predictions hold"), "{text}");
}

#[test]
fn census_json_round_trips() {
    let out = comspec(&["census", "D:8", "Q:8", "--format", "json"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let report: comspec::verify::ApplicationReport = serde_json::from_str(&text).unwrap();
    assert_eq!(report.groups, 2);
    assert_eq!(report.failures, 0);
    let mut reserialized = serde_json::to_string_pretty(&report).unwrap();
    reserialized.push('\n');
    assert_eq!(reserialized, text);
}

#[test]
fn errata_lists_exactly_the_documented_four() {
    let out = comspec(&["errata", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 4);

    let out = comspec(&["errata"]);
    let text = stdout(&out);
    assert!(text.contains("documented errata (4)"), "{text}");
}

#[test]
fn graph_export_writes_edge_list() {
    let dir = std::env::temp_dir().join("comspec-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("q8-edges.txt");
    let out = comspec(&["analyze", "Q:8", "--graph-out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let edges = std::fs::read_to_string(&path).unwrap();
    // 3 disjoint edges
    assert_eq!(edges.lines().count(), 3);
    std::fs::remove_file(&path).ok();

    // adjacency-list form: one line per vertex
    let path = dir.join("q8-adj.txt");
    let out = comspec(&[
        "analyze",
        "Q:8",
        "--graph-out",
        path.to_str().unwrap(),
        "--graph-format",
        "adj",
    ]);
    assert!(out.status.success());
    let adj = std::fs::read_to_string(&path).unwrap();
    assert_eq!(adj.lines().count(), 6);
    std::fs::remove_file(&path).ok();
}

#[test]
fn out_flag_writes_the_report_to_a_file() {
    let dir = std::env::temp_dir().join("comspec-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("d8.json");
    let out = comspec(&[
        "analyze",
        "D:8",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let report: comspec::verify::AnalysisReport =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(report.super_integral);
    std::fs::remove_file(&path).ok();
}

#[test]
fn analyze_crosscheck_confirms_multiplicities() {
    let out = comspec(&["analyze", "S:4", "--crosscheck"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("all multiplicities confirmed by rank"));
}
