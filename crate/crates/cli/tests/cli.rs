use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn snr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_snr"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn ok_stdout(args: &[&str]) -> String {
    let out = snr(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json_of(args: &[&str]) -> Value {
    serde_json::from_str(&ok_stdout(args)).unwrap()
}

fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn fixture() -> String {
    manifest_dir()
        .join("../core/fixtures/f85.json")
        .to_string_lossy()
        .into_owned()
}

fn assert_valid(schema_file: &str, instance: &Value) {
    let path = manifest_dir().join("schemas").join(schema_file);
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let compiled = jsonschema::JSONSchema::compile(&schema).expect("schema compiles");
    let msgs: Vec<String> = match compiled.validate(instance) {
        Ok(()) => Vec::new(),
        Err(errors) => errors
            .map(|e| format!("{e} at {}", e.instance_path))
            .collect(),
    };
    assert!(msgs.is_empty(), "{schema_file}: {msgs:?}");
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

#[test]
fn gamma_of_s21_is_three() {
    let v = json_of(&["gamma", "--n", "2", "--r", "1"]);
    assert_eq!(v["gamma"], 3);
    assert_eq!(v["gamma_tilde"], 3);
    assert_eq!(v["wb_count"], 1);
    assert_valid("gamma-report.schema.json", &v);
}

#[test]
fn gamma_with_slice_and_report() {
    let v = json_of(&["gamma", "--n", "4", "--r", "2", "--d", "2"]);
    assert_eq!(v["d"], 2);
    assert_valid("gamma-report.schema.json", &v);
    let v = json_of(&["report", "--n", "3", "--r", "2"]);
    assert_eq!(v["wb_count"], v["rwb_count"]);
    assert!(v.get("d").is_none());
    assert_valid("gamma-report.schema.json", &v);
}

#[test]
fn count_rows_all_agree() {
    let csv = ok_stdout(&["count", "--n-max", "6"]);
    let mut lines = csv.lines();
    assert_eq!(
        lines.next(),
        Some("n,r,k,s_recursive,s_convolution,s_bruteforce,agree")
    );
    let rows: Vec<&str> = lines.collect();
    assert!(!rows.is_empty());
    assert!(rows.iter().all(|row| row.ends_with(",true")));
}

#[test]
fn count_to_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("counts.csv");
    let path_str = path.to_str().unwrap();
    ok_stdout(&["count", "--n-max", "4", "--out", path_str]);
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        ok_stdout(&["count", "--n-max", "4"])
    );
}

#[test]
fn weights_eval_fixture() {
    let f = fixture();
    let v = json_of(&["weights-eval", "--fn", &f, "--d", "5"]);
    assert_eq!(v["phi_count"], 16);
    assert_eq!(v["is_weight"], true);
    assert_eq!(v["total"], "0");
    assert_eq!(v["sigma"].as_array().unwrap().len(), 256);
    assert_valid("weights-eval.schema.json", &v);
    let text = std::fs::read_to_string(&f).unwrap();
    assert_valid(
        "nr-function.schema.json",
        &serde_json::from_str(&text).unwrap(),
    );
}

#[test]
fn enumerate_text_and_json() {
    let text = ok_stdout(&["enumerate", "--n", "3", "--r", "2"]);
    assert_eq!(text.lines().count(), 8);
    assert_eq!(text.lines().next(), Some("00|1"));
    let v = json_of(&[
        "enumerate",
        "--n",
        "8",
        "--r",
        "5",
        "--d",
        "5",
        "--format",
        "json",
    ]);
    assert_eq!(v["words"].as_array().unwrap().len(), 56);
    assert_valid("word-list.schema.json", &v);
}

fn hasse_files(dir: &Path, order: &str) -> (String, Value) {
    let dot = dir.join(format!("{order}.dot"));
    let json = dir.join(format!("{order}.json"));
    ok_stdout(&[
        "hasse",
        "--n",
        "4",
        "--r",
        "2",
        "--order",
        order,
        "--dot",
        dot.to_str().unwrap(),
        "--json",
        json.to_str().unwrap(),
    ]);
    (
        std::fs::read_to_string(dot).unwrap(),
        serde_json::from_str(&std::fs::read_to_string(json).unwrap()).unwrap(),
    )
}

#[test]
fn hasse_outputs() {
    let dir = tempfile::tempdir().unwrap();
    for order in ["outin", "leftright"] {
        let (dot, v) = hasse_files(dir.path(), order);
        assert!(dot.starts_with("digraph"));
        assert_eq!(v["order"], order);
        assert_eq!(v["levels"].as_array().unwrap().len(), 7);
        assert_valid("diagram.schema.json", &v);
    }
}

#[test]
fn outputs_are_byte_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = hasse_files(dir.path(), "outin");
    let b = hasse_files(dir.path(), "outin");
    assert_eq!(a.0, b.0);
    assert_eq!(a.1, b.1);
    let args = ["report", "--n", "5", "--r", "3"];
    let one = snr(&args).stdout;
    let many = snr(&["--threads", "4", "report", "--n", "5", "--r", "3"]).stdout;
    let single = snr(&["--threads", "1", "report", "--n", "5", "--r", "3"]).stdout;
    assert_eq!(one, many);
    assert_eq!(one, single);
    let f = fixture();
    assert_eq!(
        snr(&["weights-eval", "--fn", &f, "--d", "3"]).stdout,
        snr(&["weights-eval", "--fn", &f, "--d", "3"]).stdout
    );
}

#[test]
fn exit_codes() {
    assert_eq!(code(&snr(&[])), 2);
    assert_eq!(code(&snr(&["enumerate", "--n", "2"])), 2);
    assert_eq!(code(&snr(&["gamma", "--n", "x", "--r", "1"])), 2);
    assert_eq!(code(&snr(&["enumerate", "--n", "2", "--r", "3"])), 3);
    assert_eq!(
        code(&snr(&["enumerate", "--n", "3", "--r", "1", "--d", "0"])),
        3
    );
    assert_eq!(code(&snr(&["gamma", "--n", "3", "--r", "0"])), 3);
    let f = fixture();
    assert_eq!(code(&snr(&["weights-eval", "--fn", &f, "--d", "9"])), 3);
    assert_eq!(
        code(&snr(&[
            "weights-eval",
            "--fn",
            "/nonexistent/f.json",
            "--d",
            "1"
        ])),
        3
    );

    let out = snr(&["gamma", "--n", "6", "--r", "3"]);
    assert_eq!(code(&out), 4);
    assert!(String::from_utf8_lossy(&out.stderr).contains("out of desk scale"));
    let out = snr(&["report", "--n", "4", "--r", "2", "--cap", "2"]);
    assert_eq!(code(&out), 4);
    assert!(out.stdout.is_empty());
    assert_eq!(code(&snr(&["--help"])), 0);
}

#[test]
fn invalid_function_file_is_a_domain_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, r#"{"n":2,"r":1,"tilde":["0"],"bar":["0"]}"#).unwrap();
    let out = snr(&["weights-eval", "--fn", path.to_str().unwrap(), "--d", "1"]);
    assert_eq!(code(&out), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("f(B1)"));
}
