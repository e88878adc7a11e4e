use std::process::{Command, Output};

use serde_json::{json, Value};

fn qgw(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut c = Command::new(env!("CARGO_BIN_EXE_qgw"));
    c.args(args);
    for (k, _) in std::env::vars().filter(|(k, _)| k.starts_with("QGW_")) {
        c.env_remove(k);
    }
    for (k, v) in env {
        c.env(k, v);
    }
    c.output().expect("binary runs")
}

fn run_json(args: &[&str]) -> Value {
    let out = qgw(args, &[]);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stdout));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn temp_path(name: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("qgw-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn ktheory_example() {
    let v = run_json(&["ktheory", "--boundary", "[[3,-3],[-3,3]]"]);
    assert_eq!(v, json!({"K0": {"rank": 1, "torsion": [3]}, "K1": {"rank": 1, "torsion": []}}));
}

#[test]
fn normalize_example() {
    let v = run_json(&["normalize", "as a"]);
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 2);
    assert_eq!(terms[0], json!({"coeff": {"num": {"0": "1"}, "den": {"0": "1"}}, "word": []}));
    assert_eq!(terms[1], json!({"coeff": {"num": {"0": "-1"}, "den": {"0": "1"}}, "word": ["g", "gs"]}));
    let v = run_json(&["normalize", "g*a"]);
    assert_eq!(v["terms"][0]["coeff"]["num"], json!({"-1": "1"}));
}

#[test]
fn haar_example() {
    let v = run_json(&["haar", "g gs"]);
    assert_eq!((&v["num"], &v["den"]), (&json!("1"), &json!("1+q^2")));
    let v = run_json(&["haar", "g gs", "--q", "1"]);
    assert_eq!(v["value"], json!("1/2"));
}

#[test]
fn output_is_byte_stable() {
    for args in [&["normalize", "(1/(1+q^2)) * g gs a as"][..], &["qaut", "2"], &["double", "--hopf", "sweedler"]] {
        assert_eq!(qgw(args, &[]).stdout, qgw(args, &[]).stdout);
    }
}

#[test]
fn errors_are_structured() {
    let out = qgw(&["normalize", "a +"], &[]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["error"]["kind"], json!("syntax"));
    let out = qgw(&["corep", "5"], &[]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["error"]["kind"], json!("resource_bound"));
    let out = qgw(&["no-such-verb"], &[]);
    assert_eq!(out.status.code(), Some(1));
    let out = qgw(&["double", "--hopf", "/nonexistent.json"], &[]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verification_failure_exits_with_two() {
    let mut doc: Value = serde_json::from_str(&qgw_core::findimhopf::zoo::sweedler().to_json()).unwrap();
    // S(x) = gx instead of −gx
    doc["antipode"][2][3] = json!("1");
    let path = temp_path("broken.json");
    std::fs::write(&path, doc.to_string()).unwrap();
    let out = qgw(&["double", "--hopf", path.to_str().unwrap()], &[]);
    assert_eq!(out.status.code(), Some(2), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn hopf_file_input() {
    let path = temp_path("sweedler.json");
    std::fs::write(&path, qgw_core::findimhopf::zoo::sweedler().to_json()).unwrap();
    let v = run_json(&["double", "--hopf", path.to_str().unwrap()]);
    assert_eq!(v["dim"], json!(16));
    let v = run_json(&["yd-check", "--hopf", path.to_str().unwrap()]);
    assert_eq!(v["passed"], json!(true));
}

#[test]
fn configuration_precedence() {
    let path = temp_path("qgw.conf");
    std::fs::write(&path, "hopf_degree = 1\nformat = json\n").unwrap();
    let conf = path.to_str().unwrap();
    let degree = |out: Output| -> Value { serde_json::from_slice::<Value>(&out.stdout).unwrap()["degree"].clone() };
    assert_eq!(degree(qgw(&["hopf-check"], &[])), json!(4));
    assert_eq!(degree(qgw(&["hopf-check", "--config", conf], &[])), json!(1));
    assert_eq!(degree(qgw(&["hopf-check"], &[("QGW_CONFIG", conf), ("QGW_HOPF_DEGREE", "2")])), json!(2));
    assert_eq!(degree(qgw(&["hopf-check", "--degree", "0"], &[("QGW_CONFIG", conf), ("QGW_DEGREE", "2")])), json!(0));
    let out = qgw(&["ktheory", "--boundary", "[[2]]"], &[("QGW_FORMAT", "text")]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "K0 = Z/2, K1 = 0");
    let out = qgw(&["ktheory", "--boundary", "[[2]]", "--format", "json"], &[("QGW_FORMAT", "text")]);
    assert!(serde_json::from_slice::<Value>(&out.stdout).is_ok());
}

#[test]
fn every_verb_runs() {
    let cases: [&[&str]; 13] = [
        &["normalize", "a as"],
        &["hopf-check", "--degree", "2"],
        &["haar", "as a"],
        &["corep", "1"],
        &["fuse", "1", "1/2"],
        &["podles", "-1"],
        &["yd-check", "--degree", "2"],
        &["double", "--hopf", "Z2"],
        &["braid", "--graded"],
        &["snf", "[[2,4],[6,8]]"],
        &["ktheory", "--boundary", "[[4,-4],[-4,4]]"],
        &["pv", "--alpha0", "[[1]]"],
        &["qaut", "1"],
    ];
    for args in cases {
        run_json(args);
    }
    assert_eq!(run_json(&["snf", "[[2,4],[6,8]]"])["invariant_factors"], json!([2, 4]));
    assert_eq!(run_json(&["pv", "--alpha0", "[[1]]"])["K1"], json!({"rank": 1, "torsion": []}));
    assert_eq!(run_json(&["braid", "--hopf", "Z3", "--trivial"])["plain_tensor"], json!(true));
    assert_eq!(run_json(&["fuse", "1", "1/2"])["fusion"], json!(["1/2", "3/2"]));
}
