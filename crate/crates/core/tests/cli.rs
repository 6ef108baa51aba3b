use std::process::{Command, Output};

fn nur4(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nur4"))
        .args(args)
        .env_remove("NUR4_JOBS")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn ring_tables() {
    let o = nur4(&["ring", "tables"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("a a 0 c b"));
    assert!(text.contains("b 0 b b 0"));
}

#[test]
fn inspect_prints_the_code() {
    let o = nur4(&["inspect", "n=4", "k0=1", "k1=2", "T=10", "U=1", "V=01"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(
        v["record"]["generator"],
        serde_json::json!(["aa0a", "bb0b", "0c00", "00cc"])
    );
    assert_eq!(v["codewords"].as_array().unwrap().len(), 16);
    assert!(v["left_dual"].is_array());
}

#[test]
fn inspect_rejects_bad_specs() {
    let o = nur4(&["inspect", "n=4", "k0=1", "k1=2", "T=1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn classify_single_type() {
    let o = nur4(&[
        "classify",
        "--n",
        "4",
        "--k0",
        "1",
        "--k1",
        "2",
        "--with-nice",
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["records"][0]["max_dmin"], 2);
    assert_eq!(v["records"][0]["optimal_count"], 4);
    assert_eq!(v["records"][0]["total_codes"], 32);
}

#[test]
fn classify_length_one_is_empty() {
    let o = nur4(&["classify", "--n", "1"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["records"], serde_json::json!([]));
    assert_eq!(v["total_enumerated"], 0);
}

#[test]
fn classify_parameter_errors() {
    assert_eq!(
        nur4(&["classify", "--n", "4", "--k0", "4", "--k1", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(nur4(&["classify", "--n", "9"]).status.code(), Some(2));
    assert_eq!(
        nur4(&["classify", "--n", "7", "--with-nice"]).status.code(),
        Some(2)
    );
    assert_eq!(
        nur4(&["classify", "--n", "3", "--jobs", "0"]).status.code(),
        Some(2)
    );
    assert_eq!(
        nur4(&["classify", "--n", "3", "--k0", "1"]).status.code(),
        Some(2)
    );
}

#[test]
fn classify_writes_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let o = nur4(&[
        "classify", "--n", "3", "--emit", "full", "--format", "csv", "--out", out, "--jobs", "2",
    ]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("{1,1}"));
    let codes = std::fs::read_to_string(dir.path().join("codes_n3.csv")).unwrap();
    assert_eq!(codes.lines().count(), 25);
    assert!(dir.path().join("summary_n3.csv").exists());
}

#[test]
fn tables_diff_reports_cells() {
    let o = nur4(&["tables", "--max-n", "4", "--diff"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("compared 16 rows, 32 cells: 0 mismatching"));
    assert!(text.contains(" 4  {1,2}            2       4"));

    let o = nur4(&["tables", "--max-n", "5", "--diff", "--policy", "left"]);
    let text = stdout(&o);
    assert!(text.contains("MISMATCH n=5 {2,2} M: published 15, computed 16"));
    assert!(text.contains("policy intersection:"));
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn inspect_full_length_type_is_invalid() {
    let o = nur4(&["inspect", "n=2", "k0=2", "k1=0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("invalid"));
}

#[test]
fn classify_length_seven_type() {
    let o = nur4(&[
        "classify", "--n", "7", "--k0", "3", "--k1", "2", "--jobs", "4",
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["records"][0]["optimal_count"], 15552);
    assert_eq!(v["records"][0]["max_dmin"], 2);
}
