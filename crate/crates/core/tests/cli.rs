use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_envlab"));
    for var in ["ENVLAB_SEED", "ENVLAB_CAP", "ENVLAB_FORMAT", "ENVLAB_INPUT", "ENVLAB_OUTPUT"] {
        c.env_remove(var);
    }
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn schema(name: &str) -> jsonschema::Validator {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs/schemas").join(name);
    let s: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    jsonschema::validator_for(&s).unwrap()
}

fn assert_valid(schema_name: &str, v: &Value) {
    let validator = schema(schema_name);
    let errors: Vec<String> = validator.iter_errors(v).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{schema_name}: {errors:?}");
}

fn json_ok(args: &[&str], schema_name: &str) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_valid(schema_name, &v);
    v
}

fn write(dir: &tempfile::TempDir, name: &str, body: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, body).unwrap();
    assert_valid_input(name, body);
    p
}

fn assert_valid_input(name: &str, body: &str) {
    let schema_name = match name.split('.').next().unwrap() {
        "group" | "torus" | "sl2" => "group.schema.json",
        "mackey" => "mackey-input.schema.json",
        "clifford" => "clifford-input.schema.json",
        "pair" => "formal-char-input.schema.json",
        "matrix" => "matrix.schema.json",
        _ => return,
    };
    assert_valid(schema_name, &serde_json::from_str(body).unwrap());
}

const SL2_11: &str = r#"{"ell":11,"n":2,"generators":[[[1,1],[0,1]],[[1,0],[1,1]]],"expected_rank":1}"#;
const TORUS: &str = r#"{"ell":11,"n":2,"generators":[[[2,0],[0,1]],[[1,0],[0,2]]]}"#;

#[test]
fn table_a_formats() {
    let out = run(&["table-a", "--n", "5", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let labels: Vec<String> = reader.records().map(|r| r.unwrap()[1].to_string()).collect();
    assert_eq!(labels, vec!["(5A1)", "(5B2)", "(5A4)"]);

    let v = json_ok(&["table-a", "--n", "6"], "table-a.schema.json");
    assert_eq!(v.as_array().unwrap().len(), 7);
    let out = run(&["table-a", "--n", "4", "--format", "text"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 4);
}

#[test]
fn tame_digits() {
    let v = json_ok(&["tame", "--ell", "5", "--d", "2", "--e", "13"], "tame-report.schema.json");
    assert_eq!(v["digits"], serde_json::json!([3, 2]));
    let v = json_ok(&["tame", "--ell", "5", "--d", "2", "--e", "24"], "tame-report.schema.json");
    assert_eq!(v["digits"], serde_json::json!([0, 0]));

    let dir = tempfile::tempdir().unwrap();
    let m = write(&dir, "matrix.json", r#"{"ell":5,"matrix":[[2]]}"#);
    let v = json_ok(&["tame", "--input", m.to_str().unwrap(), "--n2", "0"], "tame-report.schema.json");
    assert_eq!(v["digits"], serde_json::json!([1]));
    assert_eq!(v["bounded"], Value::Bool(false));
    let u = write(&dir, "matrix.unipotent.json", r#"{"ell":5,"matrix":[[1,1],[0,1]]}"#);
    let out = run(&["tame", "--input", u.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_valid("error.schema.json", &err);
    assert_eq!(err["error"], "OrderDivisibleByEll");
}

#[test]
fn nori_on_the_torus() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(&dir, "torus.json", TORUS);
    let v = json_ok(&["nori", "--input", p.to_str().unwrap()], "nori-report.schema.json");
    assert_eq!(v["quotient_order"], 1);
    assert_eq!(v["nori_order"], 1);
    assert_eq!(v["order"], 100);
}

#[test]
fn envelope_reports_are_byte_identical_and_echo_the_seed() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(&dir, "sl2.json", SL2_11);
    let args = ["envelope", "--input", p.to_str().unwrap(), "--seed", "5"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_valid("envelope-report.schema.json", &v);
    assert_eq!(v["seed"], 5);
    assert_eq!(v["factor_dims"], serde_json::json!([2]));
    assert_eq!(v["predicates"]["rank_matches_expected"], true);

    let out = bin().args(["envelope", "--input", p.to_str().unwrap()]).env("ENVLAB_SEED", "9").output().unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["seed"], 9);

    let target = dir.path().join("report.json");
    let out = run(&["envelope", "--input", p.to_str().unwrap(), "--output", target.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&target).unwrap()).unwrap();
    assert_valid("envelope-report.schema.json", &v);

    let text = run(&["envelope", "--input", p.to_str().unwrap(), "--format", "text"]);
    assert!(String::from_utf8(text.stdout).unwrap().contains("composition factor dims: [2]"));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(&dir, "sl2.json", SL2_11);
    let out = run(&["envelope", "--input", p.to_str().unwrap(), "--cap", "10"]);
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "ClosureOverflow");
    assert_eq!(err["resource"], true);

    let bad = write(&dir, "broken.json", r#"{"ell":11}"#);
    assert_eq!(run(&["nori", "--input", bad.to_str().unwrap()]).status.code(), Some(1));
    assert_eq!(run(&["nori", "--input", "/nonexistent/file.json"]).status.code(), Some(1));
    assert_eq!(run(&["eliminate", "--n", "4", "--constraint", "weird"]).status.code(), Some(1));
    assert_eq!(run(&["bogus"]).status.code(), Some(64));
    assert_eq!(run(&["table-a"]).status.code(), Some(64));
    assert_eq!(run(&["table-a", "--n", "4", "--cap", "0"]).status.code(), Some(64));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn eliminate_and_formal_char() {
    let v = json_ok(&["eliminate", "--n", "6", "--constraint", "self_dual", "--constraint", "rank=3"], "table-a.schema.json");
    let labels: Vec<&str> = v.as_array().unwrap().iter().map(|r| r["label"].as_str().unwrap()).collect();
    assert_eq!(labels, vec!["(6A3)", "(6C3)"]);

    let v = json_ok(&["formal-char", "--rep", "A1:1", "--rep", "A1:2"], "formal-char-report.schema.json");
    assert_eq!(v["dim"], 6);
    assert_eq!(v["midpoint_relation"], true);
    assert_eq!(v["self_dual"], true);

    let dir = tempfile::tempdir().unwrap();
    let p = write(
        &dir,
        "pair.json",
        r#"{"a":{"rank":2,"weights":[[1,0],[-1,0],[0,1],[0,-1]]},"b":{"rank":2,"weights":[[1,1],[1,-1],[-1,1],[-1,-1]]}}"#,
    );
    let v = json_ok(&["formal-char", "--input", p.to_str().unwrap()], "formal-char-report.schema.json");
    assert_eq!(v["verdict"], "equivalent");
}

#[test]
fn mackey_and_clifford_subcommands() {
    let dir = tempfile::tempdir().unwrap();
    // S3 on three points over F7; H = A3 with the cubic character 2 and with the trivial character.
    let group = r#"{"ell":7,"n":3,"generators":[[[0,1,0],[1,0,0],[0,0,1]],[[0,0,1],[1,0,0],[0,1,0]]]}"#;
    let rot = "[[0,0,1],[1,0,0],[0,1,0]]";
    let body = format!(
        r#"[{{"group":{group},"subgroup":[{rot}],"module":{{"ell":7,"matrices":[[[2]]]}}}},
            {{"group":{group},"subgroup":[{rot}],"module":{{"ell":7,"matrices":[[[1]]]}}}}]"#
    );
    let p = write(&dir, "mackey.json", &body);
    let v = json_ok(&["mackey", "--input", p.to_str().unwrap()], "mackey-report.schema.json");
    let rows = v.as_array().unwrap();
    assert_eq!(rows[0]["irreducible"], true);
    assert_eq!(rows[1]["irreducible"], false);
    assert_eq!(rows[1]["reason"], "condition_ii");
    assert!(rows.iter().all(|r| r["agrees"] == true));
    let csv = run(&["mackey", "--input", p.to_str().unwrap(), "--format", "csv"]);
    assert_eq!(String::from_utf8(csv.stdout).unwrap().lines().count(), 3);

    // The 2-dimensional irreducible of S3 inside the permutation module, restricted to A3.
    let clifford = format!(
        r#"{{"group":{group},"normal":[{rot}],"module":{{"ell":7,"matrices":[[[0,1],[1,0]],[[0,6],[1,6]]]}}}}"#
    );
    let p = write(&dir, "clifford.json", &clifford);
    let v = json_ok(&["clifford", "--input", p.to_str().unwrap()], "clifford-report.schema.json");
    assert_eq!((v["e"].as_u64(), v["f"].as_u64(), v["factor_dim"].as_u64()), (Some(2), Some(1), Some(1)));
    assert_eq!(v["transitive"], true);
}
