use std::process::Command;

use serde_json::Value;

fn qeuler(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qeuler"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn payload(stdout: &str) -> Value {
    let doc: Value = serde_json::from_str(stdout).expect("valid json");
    assert_eq!(doc["schema_version"], "1");
    doc["payload"].clone()
}

#[test]
fn eulerian_row() {
    let (code, out, _) = qeuler(&["eulerian", "--n", "3"]);
    assert_eq!(code, 0);
    let p = payload(&out);
    assert_eq!(p["coefficients"], serde_json::json!([[1], [2, 1, 1], [1]]));
    assert_eq!(p["variables"], serde_json::json!(["t", "q"]));
    let (_, out, _) = qeuler(&["eulerian", "--n", "2", "--r", "2"]);
    assert_eq!(
        payload(&out)["coefficients"],
        serde_json::json!([[1], [2, 0, 1], [2, 0, 1], [1]])
    );
    let (_, out, _) = qeuler(&["eulerian", "--n", "0"]);
    assert_eq!(payload(&out)["coefficients"], serde_json::json!([]));
}

#[test]
fn hookfact_example() {
    let (code, out, _) = qeuler(&["hookfact", "1,3,4,14,12,2,5,11,15,8,6,7,13,9,10"]);
    assert_eq!(code, 0);
    let p = payload(&out);
    assert_eq!(p["prefix"], serde_json::json!([1, 3, 4, 14]));
    assert_eq!(
        p["hooks"],
        serde_json::json!([[12, 2, 5, 11, 15], [8, 6, 7], [13, 9, 10]])
    );
    assert_eq!(p["lec"], 7);
}

#[test]
fn stats_and_undefined_exc() {
    let (code, out, _) = qeuler(&["stats", "3,1,2"]);
    assert_eq!(code, 0);
    let p = payload(&out);
    assert_eq!((p["exc"].as_u64(), p["des"].as_u64(), p["maj"].as_u64(), p["inv"].as_u64()),
        (Some(1), Some(1), Some(1), Some(2)));
    let (code, out, _) = qeuler(&["stats", "2,5"]);
    assert_eq!(code, 0);
    assert!(payload(&out)["exc"].is_null());
}

#[test]
fn maps() {
    let (code, out, _) = qeuler(&["map", "lemma4", "27|6389|514|"]);
    assert_eq!(code, 0);
    let p = payload(&out);
    assert_eq!(p["output"]["object"], "|72|9368|145");
    assert_eq!(p["output"]["inv_minus_lec"], 16);
    let (_, out, _) = qeuler(&["map", "lemma4", "|72|9368|145"]);
    assert_eq!(payload(&out)["output"]["object"], "27|6389|514|");

    let (code, out, _) = qeuler(&["map", "lemma2", "12345"]);
    assert_eq!(code, 0);
    assert_eq!(payload(&out)["output"]["word"], serde_json::json!([5, 1, 2, 3, 4]));

    let (code, out, _) = qeuler(&["map", "th5", "--r", "2", "1^1,1^2|2^2,2^1|"]);
    assert_eq!(code, 0);
    let p = payload(&out);
    let back = p["output"]["object"].as_str().unwrap().to_string();
    let (_, out, _) = qeuler(&["map", "th5", "--r", "2", &back]);
    assert_eq!(payload(&out)["output"]["object"], "1^1,1^2|2^2,2^1|");
}

#[test]
fn enumerate_counts() {
    let (code, out, _) = qeuler(&["enumerate", "twopix", "--n", "2", "--s", "0"]);
    assert_eq!(code, 0);
    let p = payload(&out);
    assert_eq!(p["count"], 3);
    assert_eq!(p["inv_minus_lec_distribution"], serde_json::json!([2, 1]));
    let (_, out, _) = qeuler(&["enumerate", "colored", "--n", "2", "--r", "2"]);
    assert_eq!(payload(&out)["count"], 8);
}

#[test]
fn input_errors_exit_two() {
    for args in [
        &["stats", "1,1"][..],
        &["stats", "1,x"],
        &["map", "lemma4", "21|"],
        &["map", "lemma4", "|312|"],
        &["map", "th5", "--r", "2", "1^1|"],
        &["verify", "nope"],
        &["eulerian"],
        &["frobnicate"],
        &["--format", "csv", "verify", "th1", "--max-n", "3"],
    ] {
        let (code, out, err) = qeuler(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(out.is_empty(), "{args:?}");
        assert!(!err.is_empty(), "{args:?}");
    }
}

#[test]
fn verify_all_passes_and_is_deterministic() {
    let (code, first, _) = qeuler(&["verify", "all", "--max-n", "6", "--max-rn", "6"]);
    assert_eq!(code, 0);
    let p = payload(&first);
    assert_eq!(p["status"], "pass");
    assert_eq!(p["reports"].as_array().unwrap().len(), 16);
    let (_, second, _) = qeuler(&["verify", "all", "--max-n", "6", "--max-rn", "6"]);
    assert_eq!(first, second);
}

#[test]
fn verify_default_budget() {
    let (code, out, _) = qeuler(&["verify", "all", "--max-n", "7"]);
    assert_eq!(code, 0);
    assert_eq!(payload(&out)["status"], "pass");
}

#[test]
fn zero_budget_is_skipped() {
    let (code, out, _) = qeuler(&["verify", "lemma4", "--max-n", "0"]);
    assert_eq!(code, 0);
    assert_eq!(payload(&out)["reports"][0]["status"], "skipped");
}

#[test]
fn csv_table() {
    let (code, out, _) = qeuler(&["--format", "csv", "enumerate", "twopix", "--n", "2"]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("object,lec,inv,inv_minus_lec"));
    assert_eq!(lines.count(), 4);
}
