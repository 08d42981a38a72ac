//! End-to-end tests of the `tsaudit` binary: exit codes, report shape,
//! determinism, and file export.

use std::process::{Command, Output};

fn tsaudit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tsaudit"))
        .args(args)
        .env_remove("TSAUDIT_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

#[test]
fn verify_known_counterexample_exits_1_and_reports_falsified() {
    let out = tsaudit(&["verify", "--rle", "+3,3,6,3,2,2", "--t", "9", "--json"]);
    assert_eq!(exit_code(&out), 1);
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(report["status"], "falsified");
    assert_eq!(report["verdicts"]["report"]["claim_iv_ok"], false);
    assert_eq!(report["verdicts"]["report"]["failing_iv_k"][0], 3);
    assert_eq!(report["verdicts"]["z"], "+-++-+-");
}

#[test]
fn verify_all_claims_hold_exits_0() {
    // Constant +1 prefix then -1: satisfies equation (1) only; t=1 keeps
    // every claim in range and none fails.
    let out = tsaudit(&["verify", "--seq", "+++-+", "--t", "1", "--json"]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(report["status"], "ok");
}

#[test]
fn verify_premise_failure_exits_1_with_error_status() {
    let out = tsaudit(&["verify", "--seq", "+++", "--t", "1", "--json"]);
    assert_eq!(exit_code(&out), 1);
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(report["status"], "error");
    assert_eq!(report["verdicts"]["report"]["premise_ok"], false);
}

#[test]
fn verify_rejects_invalid_run_length_with_exit_2() {
    let out = tsaudit(&["verify", "--rle", "+0,3", "--t", "1"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn verify_rejects_zero_t() {
    let out = tsaudit(&["verify", "--seq", "+++-", "--t", "0"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn verify_pad_extends_with_plus_ones() {
    let out = tsaudit(&["verify", "--rle", "+3,3,6,3,2,2", "--t", "9", "--pad", "20", "--json"]);
    assert_eq!(exit_code(&out), 1);
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(report["inputs"]["n"], 20);
    assert_eq!(report["status"], "falsified");
}

#[test]
fn falsify_catalog_emits_four_records_and_exits_0() {
    let out = tsaudit(&["falsify", "--catalog", "--json"]);
    assert_eq!(exit_code(&out), 0);
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(report["status"], "falsified");
    assert_eq!(report["verdicts"]["count"], 4);
    assert_eq!(report["verdicts"]["records"][0]["rle"], "+3,3,6,3,2,2");
    assert_eq!(report["verdicts"]["mismatch"], serde_json::Value::Null);
}

#[test]
fn falsify_search_finds_known_prefix() {
    let out = tsaudit(&["falsify", "--p", "3", "--t", "9"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout_of(&out).contains("+3,3,6,3,2,2\t9\t3\t3"));
}

#[test]
fn falsify_vacuous_search_exits_1() {
    let out = tsaudit(&["falsify", "--p", "3", "--t", "2", "--json"]);
    assert_eq!(exit_code(&out), 1);
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(report["status"], "ok");
    assert_eq!(report["verdicts"]["count"], 0);
}

#[test]
fn falsify_rejects_small_p_with_exit_2() {
    let out = tsaudit(&["falsify", "--p", "2", "--t", "5"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn falsify_family_emits_one_record() {
    let out = tsaudit(&["falsify", "--family", "--p", "9", "--json"]);
    assert_eq!(exit_code(&out), 0);
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(report["verdicts"]["records"][0]["rle"], "+9,9,18,9,8,8");
    assert_eq!(report["verdicts"]["records"][0]["t"], 30);
}

#[test]
fn falsify_family_rejects_even_p() {
    let out = tsaudit(&["falsify", "--family", "--p", "4"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn falsify_out_writes_tabular_file() {
    let dir = std::env::temp_dir().join("tsaudit-test-out");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("catalog.tsv");
    let out = tsaudit(&["falsify", "--catalog", "--out", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.starts_with("# rle\tt\tp\tfailing_k\n"));
    assert_eq!(written.lines().count(), 5);
    assert!(written.contains("+5,5,10,5,15,5,4,1,3\t26\t5\t5"));
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn barker_13_lists_the_classic_sequence() {
    let out = tsaudit(&["barker", "--n", "13"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout_of(&out).contains("+++++--++-+-+"));
}

#[test]
fn barker_out_writes_sequence_listing() {
    let dir = std::env::temp_dir().join("tsaudit-test-out");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("barker13.txt");
    let out = tsaudit(&["barker", "--n", "13", "--out", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.contains("+++++--++-+-+\n"));
    assert!(written.contains("# n=13 count=4"));
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn barker_odd_scan_reports_zero_counts() {
    let out = tsaudit(&["barker", "--odd-scan", "21", "--json"]);
    assert_eq!(exit_code(&out), 0);
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(report["status"], "ok");
    let scan = report["verdicts"]["scan"].as_array().unwrap();
    assert_eq!(scan.len(), 4);
    for entry in scan {
        assert_eq!(entry[1], 0);
    }
    assert_eq!(report["verdicts"]["findings"].as_array().unwrap().len(), 0);
}

#[test]
fn barker_rejects_length_1_and_overlarge_lengths() {
    assert_eq!(exit_code(&tsaudit(&["barker", "--n", "1"])), 2);
    assert_eq!(exit_code(&tsaudit(&["barker", "--n", "33"])), 2);
}

#[test]
fn rle_decode_and_encode() {
    let out = tsaudit(&["rle", "decode", "+3,3,6,3,2,2"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_of(&out), "+++---++++++---++--\n");

    // Signless shorthand defaults to a leading +.
    let out = tsaudit(&["rle", "decode", "3,3,6,3,2,2"]);
    assert_eq!(stdout_of(&out), "+++---++++++---++--\n");

    let out = tsaudit(&["rle", "encode", "+++++"]);
    assert_eq!(stdout_of(&out), "+5\n");

    let out = tsaudit(&["rle", "encode", ""]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn json_reports_are_deterministic_and_round_trip() {
    let first = tsaudit(&["falsify", "--p", "5", "--t", "16", "--json"]);
    let second = tsaudit(&["falsify", "--p", "5", "--t", "16", "--json", "--threads", "4"]);
    assert_eq!(exit_code(&first), 0);
    // Byte-identical across runs and thread counts.
    assert_eq!(stdout_of(&first), stdout_of(&second));

    // Same for barker: elapsed time stays out of the serialized report.
    let b1 = tsaudit(&["barker", "--n", "11", "--json"]);
    let b2 = tsaudit(&["barker", "--n", "11", "--json", "--threads", "4"]);
    assert_eq!(stdout_of(&b1), stdout_of(&b2));

    let text = stdout_of(&first);
    let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
    let reserialized = serde_json::to_string_pretty(&parsed).unwrap();
    let reparsed: serde_json::Value = serde_json::from_str(&reserialized).unwrap();
    assert_eq!(reparsed, parsed);
    for field in ["command", "inputs", "verdicts", "status", "tool_version"] {
        assert!(parsed.get(field).is_some(), "missing field {field}");
    }
}

#[test]
fn threads_env_variable_is_honoured() {
    let out = Command::new(env!("CARGO_BIN_EXE_tsaudit"))
        .args(["falsify", "--p", "5", "--t", "26", "--json"])
        .env("TSAUDIT_THREADS", "3")
        .output()
        .expect("binary runs");
    assert_eq!(exit_code(&out), 0);
    let baseline = tsaudit(&["falsify", "--p", "5", "--t", "26", "--json"]);
    assert_eq!(stdout_of(&out), stdout_of(&baseline));
}
