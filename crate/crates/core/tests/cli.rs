use std::process::Command;

use serde_json::Value;
use twgr_core::cli::run;

fn twgr(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_twgr"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["twgr", "--format", "json"];
    full.extend_from_slice(args);
    let out = run(full);
    assert_eq!(out.code, 0, "{}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

#[test]
fn classes_rows() {
    let v = json(&["classes", "3"]);
    let parts: Vec<Value> = v["classes"].as_array().unwrap().iter().map(|r| r["partition"].clone()).collect();
    assert_eq!(parts, vec![serde_json::json!([3]), serde_json::json!([2, 1]), serde_json::json!([1, 1, 1])]);
    assert_eq!(v["classes"][1]["class_size"], 3);
    assert_eq!(v["classes"][1]["centralizer_order"], 2);

    assert_eq!(json(&["classes", "0"])["classes"].as_array().unwrap().len(), 1);

    let (code, _, err) = twgr(&["classes", "100"]);
    assert_eq!(code, 2);
    assert!(err.contains("enumeration limit"), "{err}");
}

#[test]
fn character_tables() {
    let v = json(&["character", "--twist", "koszul", "--dim", "2", "--m", "3"]);
    let row = &v["rows"][0];
    assert_eq!(row["partition"], serde_json::json!([3]));
    assert_eq!(row["value"], -2);
    assert_eq!(row["degree"], 3);

    let v = json(&["character", "--twist", "trivial", "--dim", "1", "--m", "4"]);
    assert!(v["rows"].as_array().unwrap().iter().all(|r| r["value"] == 1));

    let (code, out, _) = twgr(&["character", "--twist", "koszul", "--dim", "2", "--m", "3", "--verify-oracle"]);
    assert_eq!(code, 0);
    assert!(out.contains("oracle: match"), "{out}");
}

#[test]
fn parity_twist_character() {
    let v = json(&["character", "--twist", "parity", "--dim", "1", "--m", "3"]);
    assert_eq!(v["twist"], "unit");
    assert_eq!(v["epsilon"], serde_json::json!({"a": 0, "b": 1}));
    assert_eq!(v["rows"][0]["value"], serde_json::json!({"a": 0, "b": 1}));
}

#[test]
fn extseries_identity() {
    let (code, out, _) = twgr(&["extseries", "--twist", "koszul", "--dim", "2", "--order", "10", "--check-identity"]);
    assert_eq!(code, 0);
    assert!(out.contains("identity holds"), "{out}");

    let v = json(&["extseries", "--twist", "koszul", "--dim", "2", "--order", "2"]);
    let series = v["series"].as_array().unwrap();
    assert_eq!(series[0]["normalization"], "categorical");
    assert_eq!(series[0]["series"]["coeffs"], serde_json::json!([1, -2, 1]));
    assert_eq!(series[1]["normalization"], "underlying");
    assert_eq!(series[1]["series"]["coeffs"], serde_json::json!([1, 2, 1]));
}

#[test]
fn chromatic_branches() {
    let (code, out, _) = twgr(&["chromatic", "--p", "2", "--n", "2", "--stem-orders", "8", "--alpha", "1", "--m", "2"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("ΣE_n"), "{out}");

    let v = json(&["chromatic", "--p", "2", "--n", "2", "--stem-orders", "8", "--alpha", "1", "--m", "2"]);
    assert_eq!(v["decision"]["label"], "ΣE_n");
    let rows = v["character"]["rows"].as_array().unwrap();
    let swap = rows.iter().find(|r| r["partition"] == serde_json::json!([2])).unwrap();
    assert_eq!(swap["value"], -1);
    assert_eq!(swap["degree"], 2);

    let v = json(&["chromatic", "--p", "3", "--n", "2", "--m", "2"]);
    assert_eq!(v["decision"]["label"], "E_n");
    assert_eq!(v["stem_orders"], serde_json::json!([3]));

    let (code, _, _) = twgr(&["chromatic", "--p", "2", "--n", "2", "--stem-orders", "6", "--alpha", "1"]);
    assert_eq!(code, 2);
}

#[test]
fn count_twists_and_transchromatic() {
    let (code, out, _) = twgr(&["count-twists", "--units", "2"]);
    assert_eq!((code, out.trim()), (0, "2"));
    let (_, out, _) = twgr(&["count-twists", "--units", "3", "5"]);
    assert_eq!(out.trim(), "1");

    let v = json(&["transchromatic", "--k", "1", "--j", "1", "--omega", "-1"]);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    let one = rows.iter().find(|r| r["coords"] == serde_json::json!([1])).unwrap();
    assert_eq!((one["value"].as_i64(), one["action"].as_str()), (Some(-1), Some("trivial")));

    let (code, _, _) = twgr(&["transchromatic", "--k", "1", "--j", "1", "--omega", "2"]);
    assert_eq!(code, 2);
}

#[test]
fn integrals_output() {
    let v = json(&["integrals", "--n", "4"]);
    assert_eq!(v["cardinality"], 8);
    assert_eq!(v["integral_minus_one_squared"], -7);
    assert_eq!(v["loop_integral"], -15);
    assert_eq!(v["obstruction"], true);
    assert_eq!(run(["twgr", "integrals", "--n", "0"]).code, 2);
}

#[test]
fn csv_and_plain_formats() {
    let out = run(["twgr", "--format", "csv", "classes", "3"]);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines[0], "partition,cycles,cycle_counts,centralizer_order,class_size");
    assert_eq!(lines[1], "[3],1,3:1,3,2");
    assert_eq!(lines[2], "\"[2,1]\",2,2:1 1:1,2,3");
    assert_eq!(lines.len(), 4);
    let plain = run(["twgr", "character", "--twist", "koszul", "--dim", "2", "--m", "2"]);
    assert!(plain.stdout.contains("[2]\t1\t1\t-2\t2\ttrivial"), "{}", plain.stdout);
}

#[test]
fn json_output_is_deterministic() {
    let args = ["--format", "json", "character", "--twist", "koszul", "--dim", "3", "--m", "6"];
    let (_, a, _) = twgr(&args);
    let (_, b, _) = twgr(&args);
    assert_eq!(a, b);
    let table: Value = serde_json::from_str(&a).unwrap();
    let parsed = twgr_core::CharacterTable::<num_bigint::BigInt>::from_json(&table).unwrap();
    assert_eq!(parsed.to_json().to_string() + "\n", a);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(["twgr", "character", "--dim", "2"]).code, 2);
    assert_eq!(run(["twgr", "bogus"]).code, 2);
    assert_eq!(run(["twgr", "character", "--twist", "parity", "--dim", "1", "--m", "2", "--verify-oracle"]).code, 2);
}

#[test]
fn verify_suite_passes() {
    let (code, out, _) = twgr(&["verify"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.lines().all(|l| l.starts_with("PASS")));
}
