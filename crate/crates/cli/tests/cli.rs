use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn burnside(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_burnside")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let (code, stdout, stderr) = burnside(&all);
    assert_eq!(code, 0, "{stderr}");
    let v: Value = serde_json::from_str(&stdout).expect("valid JSON");
    v["payload"].clone()
}

fn fixture(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("burnside-cli-tests-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

#[test]
fn burnside_tables() {
    let c2 = json(&["--group", "cyclic:2", "burnside-table"]);
    assert_eq!(c2["multiplication"][0][0], serde_json::json!([2, 0]));
    let k = json(&["--group", "klein4", "burnside-table"]);
    assert_eq!(k["classes"].as_array().unwrap().len(), 5);
    let a5 = json(&["--group", "alt:5", "burnside-table"]);
    assert_eq!(a5["classes"].as_array().unwrap().len(), 9);
    assert_eq!(a5["marks"][0][0], 60);
}

#[test]
fn idempotent_reports() {
    for (spec, n) in [("cyclic:6", 2), ("klein4", 2), ("alt:5", 4)] {
        let v = json(&["--group", spec, "idempotents"]);
        assert_eq!(v["idempotents"].as_array().unwrap().len(), n, "{spec}");
        assert_eq!(v["theta_zero_or_trivial"], true);
    }
}

#[test]
fn trace_from_file() {
    let span = r#"{
        "group": "cyclic:2",
        "source": {"size": 2, "generator_actions": [[1, 0]]},
        "apex": {"size": 2, "generator_actions": [[1, 0]]},
        "target": {"size": 2, "generator_actions": [[1, 0]]},
        "left": [0, 1], "right": [0, 1]
    }"#;
    let path = fixture("identity.json", span);
    let v = json(&["trace", "--span", path.to_str().unwrap()]);
    assert_eq!(v["trace"]["agree"], true);
    assert_eq!(v["trace"]["direct"], serde_json::json!(["1", "0"]));
    assert_eq!(v["trace"]["theta"], serde_json::json!(["2", "0"]));

    let path = fixture("broken.json", "{ not json");
    assert_eq!(burnside(&["trace", "--span", path.to_str().unwrap()]).0, 1);
    let path = fixture(
        "nonendo.json",
        r#"{"group":"cyclic:2","source":{"size":2,"generator_actions":[[1,0]]},
            "apex":{"size":2,"generator_actions":[[1,0]]},"target":{"size":1,"generator_actions":[[0]]},
            "left":[0,1],"right":[0,0]}"#,
    );
    assert_eq!(burnside(&["trace", "--span", path.to_str().unwrap()]).0, 2);
}

#[test]
fn random_traces_are_reproducible() {
    let args = ["--json", "--group", "klein4", "--seed", "11", "trace", "--random", "20"];
    let (c1, a, _) = burnside(&args);
    let (c2, b, _) = burnside(&args);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(a, b);
    let v: Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["payload"]["all_agree"], true);
}

#[test]
fn theta_and_representations() {
    let v = json(&["--group", "cyclic:2", "theta", "--element", "1,-2", "--ring", "Q"]);
    assert_eq!(v["character"], serde_json::json!(["0", "-2"]));
    let v = json(&["rep-counterexample", "--max-size", "6"]);
    assert_eq!(v["found"], true);
    assert_eq!(v["pair"][0]["character"], serde_json::json!(["6", "2", "2", "2"]));
    assert_ne!(v["pair"][0]["orbit_counts"], v["pair"][1]["orbit_counts"]);
    let v = json(&["cyclic-lemma", "--n", "6", "--max-size", "6"]);
    assert_eq!(v["injective"], true);
    let v = json(&["cyclic-lemma", "--multiplicities", "2,0,1,0"]);
    assert_eq!(v["e_orbit_sizes"], serde_json::json!([1]));
    assert_eq!(v["i_orbit_sizes"], serde_json::json!([1, 1, 2]));
}

#[test]
fn grothendieck_witt() {
    let v = json(&["gw", "--form", "1,-1"]);
    assert_eq!((v["rank"].clone(), v["signature"].clone()), (serde_json::json!(2), serde_json::json!(0)));
    assert_eq!(v["burnside_cyclic2"], serde_json::json!([1, 0]));
    let v = json(&["gw", "--form", "1,3", "--field", "Fp:7"]);
    assert_eq!(v["discriminant"], "nonsquare");
    assert_eq!(burnside(&["gw", "--form", "1,0"]).0, 2);
    assert_eq!(burnside(&["gw", "--form", "1,x"]).0, 1);
}

#[test]
fn curves_and_certificates() {
    let v = json(&["ec-count", "--field", "2", "--curve", "0,0,1,0,0", "--r", "4", "--naive"]);
    assert_eq!(v["count"], 3);
    assert_eq!(v["extension_counts"], serde_json::json!(["3", "9", "9", "9"]));
    assert_eq!(v["naive_agrees"], true);
    let v = json(&["ec-count", "--field", "2^3:poly=x3+x+1", "--curve", "0,0,1,0,0"]);
    assert_eq!(v["count"], 9);

    let v = json(&["obstruction", "--field", "2", "--curve", "0,0,1,0,0", "--primes", "3"]);
    assert_eq!((v["l"].clone(), v["count"].clone(), v["a"].clone(), v["gap"].clone()), (2.into(), 3.into(), 0.into(), 3.into()));
    assert_eq!(v["per_prime"][0]["min_n"], 2);
    assert_eq!(v["lemma36_prime"], 5);
    let v = json(&["obstruction", "--field", "5", "--curve", "0,0,0,-1,0", "--primes", "3"]);
    assert_eq!((v["count"].clone(), v["a"].clone(), v["gap"].clone()), (8.into(), (-2).into(), 8.into()));
    assert_eq!(v["per_prime"][0]["min_n"], 1);

    let v = json(&["obstruction", "--lmax", "20"]);
    assert_eq!(v["all_ok"], true);
    assert_eq!(v["fields"].as_array().unwrap().len(), 11);
}

#[test]
fn exit_codes() {
    assert_eq!(burnside(&["--help"]).0, 0);
    assert_eq!(burnside(&["--version"]).0, 0);
    assert_eq!(burnside(&["frobnicate"]).0, 1);
    assert_eq!(burnside(&["idempotents"]).0, 1);
    assert_eq!(burnside(&["--group", "cyclic:0", "idempotents"]).0, 2);
    assert_eq!(burnside(&["ec-count", "--field", "9", "--curve", "0,0,0,1,0"]).0, 2);
    let (code, _, stderr) = burnside(&["obstruction", "--field", "5", "--curve", "0,0,0,-1,0", "--primes", "5"]);
    assert_eq!(code, 2);
    assert!(stderr.starts_with("error:"));
    assert_eq!(burnside(&["ec-count", "--field", "5", "--curve", "0,0,0,0,0"]).0, 2);
}
