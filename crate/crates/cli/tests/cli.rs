use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn fixture(name: &str) -> String {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name);
    root.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_splitwidth")).args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn stderr_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stderr).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stderr)))
}

fn tmp(name: &str, v: &Value) -> String {
    let dir = std::env::temp_dir().join(format!("splitwidth-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, serde_json::to_string(v).unwrap()).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn prove_example_with_simplex() {
    let out = run(&["prove", "--example-p", "2", "--family", "simplex"]);
    assert_eq!(out.status.code(), Some(0));
    let d = stdout_json(&out);
    assert_eq!(d["v"], 1);
    assert_eq!(d["proved"], true);
    assert_eq!(d["rounds"][1]["optimum"], "0");
    assert_eq!(d["rounds_used"], 1);
    assert_eq!(d["width_size_bound"]["value"], "2");
    let faces = d["violated_faces"].as_array().unwrap();
    assert_eq!(faces.len(), 1);
    assert_eq!(faces[0]["dimension"], 2);
    assert_eq!(faces[0]["lattice_free"], true);
}

#[test]
fn prove_with_width_one_splits_fails() {
    let out = run(&["prove", "--example-p", "2", "--family", "splits", "--max-width", "1", "--rounds", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let d = stdout_json(&out);
    assert_eq!(d["proved"], false);
    assert_eq!(d["width_size_bound"]["value"], "inf");
    let optima: Vec<&str> = d["rounds"].as_array().unwrap().iter().map(|r| r["optimum"].as_str().unwrap()).collect();
    assert_eq!(optima, vec!["-2/3", "-1/3", "-1/6"]);
}

#[test]
fn relax_paths_agree_on_p2() {
    let out = run(&[
        "relax",
        "--instance",
        &fixture("P2.json"),
        "--body",
        &fixture("split_x1.json"),
        "--method",
        "both",
        "--check",
        "10",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let d = stdout_json(&out);
    assert_eq!(d["paths_agree"], true);
    assert_eq!(d["check"]["failures"], 0);
    let pts = d["vertices_path"]["intersection_points"].as_array().unwrap();
    assert_eq!(pts.len(), 2);
    assert_eq!(pts[0]["from"], json!({ "kind": "vertex", "inside": 1, "outside": 2 }));
    assert_eq!(pts[0]["point"], json!(["1", "1/2"]));
    let vv = &d["vertices_path"]["relaxation"]["vrep"]["vertices"];
    assert_eq!(vv, &json!([["1", "1/2"], ["1", "2"], ["5/2", "1/2"]]));
}

#[test]
fn relax_paths_agree_on_unbounded_p3() {
    let out = run(&["relax", "--instance", &fixture("P3.json"), "--body", &fixture("split_x1.json"), "--method", "both"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["paths_agree"], true);
}

#[test]
fn width_of_simplex3() {
    let out = run(&["width", "--body", &fixture("simplex3.json")]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["max_facet_width"], "3");
}

#[test]
fn emitted_polyhedron_round_trips() {
    let out = run(&["relax", "--instance", &fixture("P2.json"), "--body", &fixture("split_x1.json"), "--emit", "hrep"]);
    let d = stdout_json(&out);
    let mut h = d["vertices_path"]["relaxation"]["hrep"].clone();
    h.as_object_mut().unwrap().insert("v".into(), json!(1));
    let path = tmp("roundtrip.json", &h);
    // a split far from P is trivial, so the closure re-emits P
    let out = run(&["closure", "--instance", &path, "--family", &fixture("far_split.json"), "--emit", "hrep"]);
    assert_eq!(out.status.code(), Some(0));
    let mut again = stdout_json(&out)["closure"]["hrep"].clone();
    again.as_object_mut().unwrap().insert("v".into(), json!(1));
    assert_eq!(again, h);
}

#[test]
fn closure_of_two_splits_contains_one_one() {
    let out = run(&[
        "closure",
        "--instance",
        &fixture("P2.json"),
        "--family",
        &fixture("splits_x1_x2.json"),
        "--method",
        "both",
        "--emit",
        "vrep",
    ]);
    let d = stdout_json(&out);
    assert_eq!(d["paths_agree"], true);
    assert!(d["closure"]["vrep"]["vertices"].as_array().unwrap().contains(&json!(["1", "1"])));
}

#[test]
fn closure_agrees_with_hull_oracle() {
    let cl = stdout_json(&run(&["closure", "--instance", &fixture("P2.json"), "--splits", "1", "--emit", "vrep"]));
    let hull = stdout_json(&run(&["oracle-hull", "--instance", &fixture("P2.json"), "--emit", "vrep"]));
    assert_eq!(cl["closure"]["vrep"]["vertices"], hull["hull"]["vrep"]["vertices"]);
}

#[test]
fn dominance_and_certificate() {
    let d = stdout_json(&run(&[
        "dominate",
        "--instance",
        &fixture("P2.json"),
        "--first",
        &fixture("cut_a.json"),
        "--second",
        &fixture("cut_b.json"),
    ]));
    assert_eq!(d["first_dominates_second"], true);
    assert_eq!(d["second_dominates_first"], false);
    let c = stdout_json(&run(&[
        "certify",
        "--instance",
        &fixture("P2.json"),
        "--family",
        &fixture("cuts_ab.json"),
        "--candidate",
        &fixture("cut_c.json"),
    ]));
    assert_eq!(c["certificate"]["kind"], "dominated");
    let bad = tmp("bad_cut.json", &json!({ "v": 1, "delta": ["2", "2"], "delta0": "5" }));
    let out = run(&["certify", "--instance", &fixture("P2.json"), "--family", &fixture("cuts_ab.json"), "--candidate", &bad]);
    let c = stdout_json(&out);
    assert_eq!(c["certificate"]["kind"], "invalid");
}

#[test]
fn faces_of_example() {
    let d = stdout_json(&run(&[
        "faces",
        "--instance",
        &fixture("example2_hrep.json"),
        "--cut",
        &fixture("cut_y_le_0.json"),
        "--candidates",
        &fixture("simplex2_family.json"),
    ]));
    let faces = d["faces"].as_array().unwrap();
    assert_eq!(faces.len(), 7);
    let violated: Vec<&Value> = faces.iter().filter(|f| f["kind"] == "violated").collect();
    assert_eq!(violated.len(), 1);
    assert_eq!(violated[0]["dimension"], 2);
    assert!(faces.iter().all(|f| f["cross_check_agrees"] == true));
    assert_eq!(d["width_size"]["value"], "2");
}

#[test]
fn enumerate_splits_counts() {
    let d = stdout_json(&run(&["enumerate-splits", "--dim", "2", "--integer-vars", "1,2", "--bound", "1"]));
    assert_eq!(d["bodies"].as_array().unwrap().len(), 4);
    let d = stdout_json(&run(&["enumerate-splits", "--dim", "3", "--integer-vars", "1,2", "--bound", "2"]));
    assert_eq!(d["bodies"].as_array().unwrap().len(), 8);
}

#[test]
fn example_output_reparses() {
    let d = stdout_json(&run(&["example", "--p", "2"]));
    assert_eq!(d["target"], json!({ "delta": ["0", "0", "-1"], "delta0": "0" }));
    let mut body = d["body"].clone();
    body.as_object_mut().unwrap().insert("v".into(), json!(1));
    let path = tmp("s2.json", &body);
    assert_eq!(stdout_json(&run(&["width", "--body", &path]))["max_facet_width"], "2");
}

#[test]
fn version_is_enforced() {
    let path = tmp("v2.json", &json!({ "v": 2, "dim": 1, "vertices": [["0"]] }));
    let out = run(&["oracle-hull", "--instance", &path]);
    assert_eq!(out.status.code(), Some(64));
    assert_eq!(stderr_json(&out)["error"]["kind"], "parse");
    let path = tmp("nov.json", &json!({ "dim": 1, "vertices": [["0"]] }));
    assert_eq!(run(&["oracle-hull", "--instance", &path]).status.code(), Some(64));
}

#[test]
fn error_codes() {
    let out = run(&["relax", "--instance", &fixture("P2.json"), "--body", &fixture("simplex3.json")]);
    assert_eq!(out.status.code(), Some(65));
    assert_eq!(stderr_json(&out)["error"]["kind"], "semantic");
    let out = run(&["--budget", "3", "oracle-hull", "--instance", &fixture("P2.json")]);
    assert_eq!(out.status.code(), Some(69));
    let out = run(&["enumerate-splits", "--dim", "2", "--integer-vars", "1,2", "--bound", "0"]);
    assert_eq!(out.status.code(), Some(65));
    assert_eq!(run(&["no-such-verb"]).status.code(), Some(64));
}

#[test]
fn runs_are_deterministic() {
    let args = ["relax", "--instance", &fixture("P2.json"), "--body", &fixture("split_x2.json"), "--method", "both", "--check", "5"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
}
