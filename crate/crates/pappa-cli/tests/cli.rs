use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn pappa(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pappa")).args(args).output().expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn entries(m: &Value) -> Vec<(f64, f64)> {
    m["entries"].as_array().unwrap().iter().map(|e| (e["re"].as_f64().unwrap(), e["im"].as_f64().unwrap())).collect()
}

fn close(a: &[(f64, f64)], b: &[(f64, f64)]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x.0 - y.0).abs() < 1e-12 && (x.1 - y.1).abs() < 1e-12)
}

#[test]
fn temperley_lieb_suite_passes_exactly() {
    let out = pappa(&["verify", "--suite", "tl", "--N", "3", "--m", "3", "--mode", "exact"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json_of(&out);
    assert_eq!(r["pass"], true);
    let names: Vec<&str> = r["records"].as_array().unwrap().iter().map(|x| x["identity"].as_str().unwrap()).collect();
    assert!(names.contains(&"E_i E_(i+-1) E_i = E_i"));
    assert!(r["records"].as_array().unwrap().iter().all(|x| x["mode"] == "exact" && x["deviation"] == 0.0));
}

#[test]
fn all_suites_pass_at_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = pappa(&["verify", "--suite", "all", "--N", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let r: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    let records = r["records"].as_array().unwrap();
    assert!(r["pass"].as_bool().unwrap());
    for suite in ["pf", "jw", "tl", "sft", "pauli", "quadratic", "braid", "clifford", "rp", "tangle"] {
        assert!(records.iter().any(|x| x["suite"] == suite), "missing {}", suite);
    }
    // both choices of ζ are covered for even N
    assert!(records.iter().any(|x| x["zeta_sign"] == 1) && records.iter().any(|x| x["zeta_sign"] == -1));
}

#[test]
fn report_order_is_stable() {
    let a = pappa(&["verify", "--suite", "pf", "--N", "2..3", "--m", "1..2"]);
    let b = pappa(&["verify", "--suite", "pf", "--N", "2..3", "--m", "1..2"]);
    assert_eq!(a.stdout, b.stdout);
    let r = json_of(&a);
    let keys: Vec<(u64, i64, u64)> = r["records"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| (x["N"].as_u64().unwrap(), -x["zeta_sign"].as_i64().unwrap(), x["m"].as_u64().unwrap()))
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn braid_suite_falls_back_with_a_warning() {
    let out =
        pappa(&["verify", "--suite", "braid", "--N", "6", "--mode", "exact", "--order", "24", "--zeta-sign", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json_of(&out);
    let warnings = r["warnings"].as_array().unwrap();
    assert_eq!(warnings.len(), 1);
    assert!(warnings[0].as_str().unwrap().contains("not representable"));
}

#[test]
fn pauli_export_is_the_standard_representation() {
    let out = pappa(&["pauli", "--N", "2", "--version", "q", "--zeta-sign", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json_of(&out);
    assert!(close(&entries(&r["X"]), &[(0.0, 0.0), (1.0, 0.0), (1.0, 0.0), (0.0, 0.0)]));
    assert!(close(&entries(&r["Y"]), &[(0.0, 0.0), (0.0, -1.0), (0.0, 1.0), (0.0, 0.0)]));
    assert!(close(&entries(&r["Z"]), &[(1.0, 0.0), (0.0, 0.0), (0.0, 0.0), (-1.0, 0.0)]));
    assert!(r["X"]["entries"][1]["exact"].is_object());
}

#[test]
fn braid_export_has_nine_by_nine_matrices() {
    let r = json_of(&pappa(&["braid", "--N", "3"]));
    for key in ["b+", "b-"] {
        assert_eq!(r[key]["rows"], 9);
        assert_eq!(r[key]["cols"], 9);
        assert_eq!(r[key]["entries"].as_array().unwrap().len(), 81);
    }
}

#[test]
fn clifford_enumeration_orders() {
    let r = json_of(&pappa(&["clifford", "--N", "3", "--enumerate"]));
    assert_eq!(r["order"], 216);
    let r = json_of(&pappa(&["clifford", "--N", "2", "--enumerate"]));
    assert_eq!(r["order"], 24);
}

#[test]
fn rp_verdict_sets_the_exit_code() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.json");
    let bad = dir.path().join("bad.json");
    fs::write(&good, r#"{"N":2,"m":1,"entries":[{"row":[1],"col":[1],"re":1.0,"im":0.0}]}"#).unwrap();
    fs::write(&bad, r#"{"N":2,"m":1,"entries":[{"row":[1],"col":[1],"re":-1.0,"im":0.0}]}"#).unwrap();

    let out = pappa(&["rp", "--input", good.to_str().unwrap(), "--betas", "0,0.5,1"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json_of(&out);
    assert_eq!(r["positive"], true);
    assert_eq!(r["values"].as_array().unwrap().len(), 6);

    let out = pappa(&["rp", "--input", bad.to_str().unwrap(), "--betas", "0,0.5,1"]);
    assert_eq!(out.status.code(), Some(2));
    let r = json_of(&out);
    assert_eq!(r["positive"], false);
    assert!(r["witness"].is_object());
}

#[test]
fn rp_with_explicit_test_elements() {
    let dir = tempfile::tempdir().unwrap();
    let j = dir.path().join("j.json");
    let xs = dir.path().join("xs.json");
    fs::write(&j, r#"{"N":2,"m":1,"entries":[{"row":[1],"col":[1],"re":1.0}]}"#).unwrap();
    fs::write(&xs, r#"[{"N":2,"m":1,"terms":[{"I":[0],"coeff":{"re":1,"im":0}},{"I":[1],"coeff":{"re":0,"im":2}}]}]"#)
        .unwrap();
    let out = pappa(&["rp", "--input", j.to_str().unwrap(), "--xs", xs.to_str().unwrap(), "--betas", "0,1"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json_of(&out);
    let values = r["values"].as_array().unwrap();
    assert_eq!(values.len(), 2);
    // at β = 0 only the grade-0 part of 1 + 2i c contributes
    assert!((values[0]["value"].as_f64().unwrap() - 1.0).abs() < 1e-9);
}

#[test]
fn rp_ensemble_has_no_mismatches() {
    let out = pappa(&["rp", "--ensemble", "40", "--N", "2", "--m", "1", "--seed", "11"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json_of(&out);
    assert_eq!(r["count"], 40);
    assert_eq!(r["mismatches"], 0);
}

#[test]
fn input_errors_exit_with_one() {
    let dir = tempfile::tempdir().unwrap();
    let graded = dir.path().join("graded.json");
    fs::write(&graded, r#"{"N":2,"m":1,"entries":[{"row":[1],"col":[0],"re":1.0}]}"#).unwrap();
    assert_eq!(pappa(&["rp", "--input", graded.to_str().unwrap()]).status.code(), Some(1));

    let garbage = dir.path().join("garbage.json");
    fs::write(&garbage, "not json").unwrap();
    assert_eq!(pappa(&["rp", "--input", garbage.to_str().unwrap()]).status.code(), Some(1));

    assert_eq!(pappa(&["rp", "--input", "/nonexistent/j.json"]).status.code(), Some(1));
    assert_eq!(pappa(&["verify", "--suite", "nope"]).status.code(), Some(1));
    assert_eq!(pappa(&["verify", "--unknown-flag"]).status.code(), Some(1));
    assert_eq!(pappa(&["verify", "--suite", "pf", "--N", "9"]).status.code(), Some(1));
    assert_eq!(pappa(&["pauli", "--N", "3", "--version", "sideways"]).status.code(), Some(1));
    assert_eq!(pappa(&["eval-tangle", "--N", "2", "--word", "in=1;cup@9"]).status.code(), Some(1));
    assert_eq!(pappa(&["--help"]).status.code(), Some(0));
}

#[test]
fn parse_errors_report_line_and_column() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w.tangle");
    fs::write(&path, "N=2\nin=1\ncup@2\nwiggle@1\n").unwrap();
    let out = pappa(&["eval-tangle", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("4:1"));
}

#[test]
fn labelled_circle_evaluates_to_root_n_times_a_phase() {
    let out = pappa(&["eval-tangle", "--word", "N=3;cup@1;c@1;c^2@2;cap@1"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json_of(&out);
    assert_eq!(r["result"]["kind"], "scalar");
    let v = &r["result"]["value"];
    let norm = (v["re"].as_f64().unwrap().powi(2) + v["im"].as_f64().unwrap().powi(2)).sqrt();
    assert!((norm - 3f64.sqrt()).abs() < 1e-12);
    assert!(v["exact"].is_object());
}

#[test]
fn snake_evaluates_to_the_identity() {
    let r = json_of(&pappa(&["eval-tangle", "--N", "2", "--word", "in=1;cup@2;cap@1"]));
    assert_eq!(r["result"]["kind"], "operator");
    assert!(close(&entries(&r["result"]["value"]), &[(1.0, 0.0), (0.0, 0.0), (0.0, 0.0), (1.0, 0.0)]));
}
