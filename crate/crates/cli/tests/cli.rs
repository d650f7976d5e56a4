use std::process::{Command, Output};

use serde_json::Value;

fn qhopf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qhopf")).args(args).env_remove("QHOPF_CAP").output().expect("binary runs")
}

fn qhopf_env(args: &[&str], cap: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qhopf")).args(args).env("QHOPF_CAP", cap).output().expect("binary runs")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json on stdout")
}

fn lambdas(v: &Value, key: &str) -> Vec<String> {
    v["rows"].as_array().unwrap().iter().map(|r| r[key].as_str().unwrap().to_string()).collect()
}

#[test]
fn verify_hodge_passes_and_is_deterministic() {
    let a = qhopf(&["verify", "--suite", "hodge", "--seed", "7"]);
    assert_eq!(a.status.code(), Some(0));
    let v = json(&a);
    assert_eq!(v["suite"], "hodge");
    assert_eq!(v["failed"], 0);
    let checks = v["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    assert!(checks.iter().all(|c| c["pass"] == true && c.get("witness").is_none()));
    let ids: Vec<&str> = checks.iter().map(|c| c["id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    let b = qhopf(&["verify", "--suite", "hodge", "--seed", "7"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_all_aggregates_every_suite() {
    let o = qhopf(&["verify", "--suite", "all", "--samples", "3", "--seed", "11"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stdout));
    let v = json(&o);
    assert_eq!(v["suite"], "all");
    assert_eq!(v["samples"], 3);
    for s in ["algebra", "actions", "calculus", "hodge", "sphere", "bundles", "gauge", "classical"] {
        let prefix = format!("{}.", s);
        assert!(v["checks"].as_array().unwrap().iter().any(|c| c["id"].as_str().unwrap().starts_with(&prefix)), "{}", s);
    }
}

#[test]
fn unknown_suite_is_usage_error() {
    assert_eq!(qhopf(&["verify", "--suite", "bogus"]).status.code(), Some(2));
    assert_eq!(qhopf(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(qhopf(&["spectrum", "--jmax", "1/3"]).status.code(), Some(2));
    assert_eq!(qhopf(&["spectrum", "--format", "xml"]).status.code(), Some(2));
}

#[test]
fn sphere_spectrum_rows() {
    let o = qhopf(&["spectrum", "--kind", "sphere", "--jmax", "2", "--q", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(lambdas(&v, "j"), ["0", "1", "2"]);
    assert_eq!(lambdas(&v, "lambda"), ["0", "-q^2 - 1", "-q^4 - 2*q^2 - 2 - q^-2"]);
    // -J(J+1) for alpha = 1
    assert_eq!(lambdas(&v, "lambda_at_q"), ["0", "-2", "-6"]);
}

#[test]
fn gauged_spectrum_rows() {
    let o = qhopf(&["spectrum", "--kind", "gauged", "--n", "1", "--jmax", "3/2"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(lambdas(&v, "j"), ["1/2", "3/2"]);
    assert_eq!(lambdas(&v, "lambda"), ["-1/2", "-q^2 - 3/2 - q^-2"]);
}

#[test]
fn total_spectrum_ground_state() {
    let v = json(&qhopf(&["spectrum", "--kind", "total", "--n", "0", "--jmax", "0"]));
    assert_eq!(lambdas(&v, "lambda"), ["0"]);
    let v = json(&qhopf(&["spectrum", "--kind", "total", "--n", "-1", "--jmax", "1/2", "--q", "1"]));
    assert_eq!(lambdas(&v, "lambda"), ["-3/4"]);
}

#[test]
fn invalid_indices_exit_two() {
    assert_eq!(qhopf(&["spectrum", "--kind", "total", "--n", "-3", "--jmax", "1"]).status.code(), Some(2));
    assert_eq!(qhopf(&["spectrum", "--kind", "sphere", "--n", "1", "--jmax", "1"]).status.code(), Some(2));
    assert_eq!(qhopf(&["spectrum", "--alpha", "-1"]).status.code(), Some(2));
    assert_eq!(qhopf(&["peter-weyl", "--p", "-1"]).status.code(), Some(2));
}

#[test]
fn winding_cap_from_environment() {
    assert_eq!(qhopf_env(&["projector", "--n", "3"], "2").status.code(), Some(2));
    assert_eq!(qhopf_env(&["projector", "--n", "2"], "2").status.code(), Some(0));
    assert_eq!(qhopf_env(&["projector", "--n", "1"], "many").status.code(), Some(2));
    let v = json(&qhopf_env(&["verify", "--suite", "bundles", "--samples", "2"], "2"));
    assert_eq!(v["cap"], 2);
    assert_eq!(v["failed"], 0);
}

#[test]
fn projector_report() {
    let o = qhopf(&["projector", "--n", "-2"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["pass"], true);
    assert_eq!(v["ket"].as_array().unwrap().len(), 3);
    assert_eq!(v["projector"].as_array().unwrap().len(), 3);
    for k in ["normalized", "idempotent", "self_adjoint", "entries_in_l0", "curvature"] {
        assert_eq!(v["checks"][k], true, "{}", k);
    }
}

#[test]
fn gauged_master_relation() {
    let o = qhopf(&["gauged", "--n", "-2", "--jmax", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["master_relation"]["holds"], true);
    // J = 1, 2, 3 with 3 + 5 + 7 vectors
    assert_eq!(v["master_relation"]["checked"], 15);
    assert_eq!(v["spectrum"]["rows"].as_array().unwrap().len(), 3);
}

#[test]
fn peter_weyl_box() {
    let v = json(&qhopf(&["peter-weyl", "--p", "2"]));
    assert_eq!(v["pass"], true);
    assert_eq!(v["entries"].as_array().unwrap().len(), 9);
}

#[test]
fn classical_checks() {
    for c in ["structure-constants", "spectra", "calculus"] {
        let o = qhopf(&["classical", "--check", c]);
        assert_eq!(o.status.code(), Some(0), "{}", c);
        let v = json(&o);
        assert!(v["items"].as_array().unwrap().iter().all(|i| i["ok"] == true));
    }
}

#[test]
fn csv_and_out_file() {
    let o = qhopf(&["spectrum", "--kind", "gauged", "--n", "1", "--jmax", "3/2", "--format", "csv"]);
    let text = String::from_utf8(o.stdout).unwrap();
    assert_eq!(text.lines().next(), Some("n,j,multiplicity,lambda"));
    assert_eq!(text.lines().count(), 3);

    let path = std::env::temp_dir().join(format!("qhopf-test-{}.json", std::process::id()));
    let o = qhopf(&["--out", path.to_str().unwrap(), "verify", "--suite", "algebra", "--samples", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["suite"], "algebra");
    std::fs::remove_file(path).ok();
}

#[test]
fn json_keys_are_sorted() {
    let o = qhopf(&["verify", "--suite", "classical"]);
    let text = String::from_utf8(o.stdout).unwrap();
    let order = ["\"cap\"", "\"checks\"", "\"failed\"", "\"passed\"", "\"samples\"", "\"seed\"", "\"suite\""];
    let pos: Vec<usize> = order.iter().map(|k| text.rfind(k).unwrap()).collect();
    assert!(pos.windows(2).all(|w| w[0] < w[1]), "{}", text);
}
