use std::io::Write;
use std::process::{Command, Output, Stdio};

use hyperterrain_core::generators::{gen_fig3, Fig3Params};
use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_hyperterrain"));
    c.env_remove("HYPERTERRAIN_THREADS");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    let o = run(&a);
    assert!(code(&o) <= 1, "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    validate(&v);
    v
}

fn validate(v: &Value) {
    let schema: Value = serde_json::from_str(include_str!("../schema/hyperterrain.schema.json")).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let errors: Vec<String> = validator.iter_errors(v).map(|e| format!("{} at {}", e, e.instance_path())).collect();
    assert!(errors.is_empty(), "schema errors: {errors:?}");
}

fn file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn stats_on_fig3_and_paths() {
    let v = json(&["stats", "--gen", "fig3:2:1"]);
    assert_eq!(v["rad"], 5);
    assert_eq!(v["diam"], 8);
    assert!(v["delta2"].is_u64());
    let v = json(&["stats", "--gen", "path:5"]);
    assert_eq!((v["rad"].as_u64(), v["diam"].as_u64()), (Some(2), Some(4)));
    let text = stdout(&run(&["stats", "--gen", "path:5"]));
    assert!(text.contains("rad\t2") && text.contains("diam\t4"));
}

#[test]
fn outputs_use_original_labels() {
    let f = file("# a path with sparse labels\n100 7\n7 42\n");
    let v = json(&["stats", "-i", f.path().to_str().unwrap()]);
    assert_eq!(v["center"], serde_json::json!([7]));
    let v = json(&["ecc", "-i", f.path().to_str().unwrap(), "--mode", "exact"]);
    let labels: Vec<u64> = v["rows"].as_array().unwrap().iter().map(|r| r["vertex"].as_u64().unwrap()).collect();
    assert_eq!(labels, [7, 42, 100]);
    let v = json(&["terrain", "-i", f.path().to_str().unwrap(), "--from", "100", "--to", "42"]);
    assert_eq!(v["path"], serde_json::json!([100, 7, 42]));
}

#[test]
fn input_errors_exit_2() {
    let disconnected = file("1 2\n3 4\n");
    let o = run(&["stats", "-i", disconnected.path().to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("disconnected"));
    let malformed = file("1 2\n2 x\n");
    let o = run(&["verify", "-i", malformed.path().to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    assert_eq!(code(&run(&["stats", "-i", "/nonexistent/graph.txt"])), 2);
    assert_eq!(code(&run(&["stats", "--gen", "wheel:5"])), 2);
    assert_eq!(code(&run(&["terrain", "--gen", "path:5", "--from", "0", "--to", "9"])), 2);
    assert_eq!(code(&run(&["stats"])), 2);
    assert_eq!(code(&run(&["stats", "--gen", "path:4", "-i", "x"])), 2);
    assert_eq!(code(&run(&["stats", "--gen", "path:4", "--threads", "0"])), 2);
    assert_eq!(code(&run(&["ecc", "--gen", "path:4", "--mode", "fast"])), 2);
}

#[test]
fn standard_input() {
    let mut child = bin()
        .args(["stats", "-i", "-", "--format", "json"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"0 1\n1 2\n2 3\n3 0\n").unwrap();
    let o = child.wait_with_output().unwrap();
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["delta2"], 2);
}

#[test]
fn gen_round_trips_through_stats() {
    let o = run(&["gen", "gnm:30:60:4"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 60);
    let f = file(&text);
    let a = json(&["stats", "-i", f.path().to_str().unwrap()]);
    let b = json(&["stats", "--gen", "gnm:30:60:4"]);
    assert_eq!(a, b);
}

fn errors(v: &Value) -> Vec<i64> {
    v["rows"].as_array().unwrap().iter().map(|r| r["error"].as_i64().unwrap()).collect()
}

#[test]
fn tree_input_has_zero_error_in_every_mode() {
    for mode in ["exact", "pair", "tree", "tree-fast"] {
        let v = json(&["ecc", "--gen", "tree:40:3", "--mode", mode, "--with-exact"]);
        assert!(errors(&v).iter().all(|&e| e == 0), "{mode}");
        assert_eq!(v["max_abs_error"], 0);
    }
}

#[test]
fn estimator_errors_within_guarantees() {
    for seed in 1..=3 {
        let g = format!("gnm:60:240:{seed}");
        let v = json(&["ecc", "--gen", &g, "--mode", "pair", "--with-exact"]);
        let d2 = v["delta2"].as_i64().unwrap();
        assert_eq!(v["guarantee"]["bound"].as_i64(), Some(d2));
        assert!(errors(&v).iter().all(|&e| -d2 <= e && e <= 0));
        let v = json(&["ecc", "--gen", &g, "--mode", "tree-fast", "--k", "1", "--with-exact"]);
        assert!(errors(&v).iter().all(|&e| 0 <= e && e <= 3 * d2));
        let v = json(&["ecc", "--gen", &g, "--mode", "tree", "--with-exact"]);
        assert!(errors(&v).iter().all(|&e| 0 <= e && e <= 2 * d2 + 1));
    }
}

#[test]
fn ecc_tsv_has_guarantee_column() {
    let text = stdout(&run(&["ecc", "--gen", "cycle:5", "--mode", "pair", "--delta2", "1"]));
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("# method=pair_left delta2=1"));
    assert_eq!(lines.next().unwrap(), "vertex\testimate\tguarantee");
    assert!(lines.all(|l| l.ends_with("\tleft:2d=1")));
}

#[test]
fn terrain_examples() {
    let v = json(&["terrain", "--gen", "path:5", "--from", "0", "--to", "4"]);
    assert_eq!(v["strip"], "\\\\//");
    assert_eq!(v["classes"], "DDUU");
    assert_eq!(v["identities"]["hold"], true);
    let v = json(&["terrain", "--gen", "cycle:6", "--from", "0", "--to", "3"]);
    assert_eq!(v["strip"], "---");

    let f = gen_fig3(Fig3Params { k: 2, p: 1 }).unwrap();
    let (xs, x, u1, u4) = (f.v("x*"), f.v("x"), f.v("u1"), f.v("u4"));
    let v = json(&["terrain", "--gen", "fig3:2:1", "--from", &xs.to_string(), "--to", &u4.to_string()]);
    assert_eq!(v["counts"]["up"], 1);
    let path: Vec<u64> = v["path"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect();
    let up = v["classes"].as_str().unwrap().find('U').unwrap();
    assert_eq!((path[up], path[up + 1]), (x as u64, u1 as u64));
}

#[test]
fn convexity_reports() {
    let v = json(&["convexity", "--gen", "grid:4x5", "--disks", "50", "--set", "0,19"]);
    assert_eq!(v["passed"], true);
    assert_eq!(v["disks"].as_array().unwrap().len(), 50);
    assert!(v["set"]["beta_min"].as_u64().unwrap() > 0);
    let o = run(&["convexity", "--gen", "cycle:8", "--delta2", "0"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn verify_exit_codes() {
    assert_eq!(code(&run(&["verify", "--corpus", "trees"])), 0);
    let v = json(&["verify", "--gen", "fig3:2:1"]);
    assert_eq!(v["passed"], true);
    let ter4 = v["checks"].as_array().unwrap().iter().find(|c| c["check_id"] == "TER-4").unwrap();
    let f = gen_fig3(Fig3Params { k: 2, p: 1 }).unwrap();
    let (x, u1) = (f.v("x") as u64, f.v("u1") as u64);
    assert!(ter4["examples"].as_array().unwrap().iter().any(|h| {
        let h: Vec<u64> = h.as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect();
        h.windows(2).any(|e| e == [x, u1])
    }));
    let v = json(&["verify", "--corpus", "path:6,cycle:5"]);
    assert_eq!(v["graphs"], 2);
    assert_eq!(v["passed"], true);
}

#[test]
fn caps_skip_and_force() {
    let v = json(&["stats", "--gen", "path:30", "--delta-cap", "10"]);
    assert!(v["delta2"].is_null());
    assert_eq!(v["skipped"][0]["what"], "delta");
    let v = json(&["stats", "--gen", "path:30", "--delta-cap", "10", "--force"]);
    assert_eq!(v["delta2"], 0);
    let v = json(&["verify", "--gen", "cycle:30", "--delta-cap", "10"]);
    assert_eq!(v["delta_source"], "unavailable");
    let skipped = v["checks"].as_array().unwrap().iter().filter(|c| c["status"] == "skipped").count();
    assert!(skipped > 0);
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    let args = ["verify", "--gen", "gnm:50:150:2", "--seed", "9", "--format", "json"];
    let a = bin().args(args).env("HYPERTERRAIN_THREADS", "1").output().unwrap();
    let b = bin().args(args).env("HYPERTERRAIN_THREADS", "4").output().unwrap();
    let c = bin().args(args).arg("--threads").arg("3").output().unwrap();
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
    let e = ["ecc", "--gen", "gnm:200:800:3", "--mode", "tree-fast", "--k", "2"];
    assert_eq!(run(&e).stdout, run(&e).stdout);
}

#[test]
fn report_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("r.json");
    let o = run(&["verify", "--gen", "grid:3x4", "--format", "json", "-o", p.to_str().unwrap()]);
    assert_eq!(std::fs::read(&p).unwrap(), o.stdout);
}
