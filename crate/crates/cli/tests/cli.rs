use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn hg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hg"))
        .args(args)
        .env_remove("HG_BUDGET")
        .output()
        .expect("hg runs")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}",
            String::from_utf8_lossy(&out.stdout)
        )
    })
}

fn construct(dir: &Path, family: &str, params: &str) -> PathBuf {
    let path = dir.join(format!("{family}-{}.json", params.replace([',', '='], "_")));
    let mut args = vec![
        "construct",
        "--family",
        family,
        "--output",
        path.to_str().unwrap(),
    ];
    if !params.is_empty() {
        args.extend(["--params", params]);
    }
    let out = hg(&args);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    path
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn analyze_linear_cycle() {
    let dir = TempDir::new().unwrap();
    let c34 = construct(dir.path(), "linear_cycle", "m=4,r=3");
    let out = hg(&["analyze", p(&c34)]);
    assert_eq!(out.status.code(), Some(0));
    let r = &report(&out)["results"];
    assert!(r["tree"].is_null());
    assert_eq!(r["sigma"]["value"], 2);
    assert_eq!(r["tau"]["value"], 2);
    assert_eq!(r["reducible"], 1);
}

#[test]
fn analyze_tight_tree() {
    let dir = TempDir::new().unwrap();
    let t3 = write(
        dir.path(),
        "t3.json",
        r#"{"n": 5, "edges": [[0,1,2],[1,2,3],[2,3,4]]}"#,
    );
    let out = hg(&["analyze", p(&t3), "--certify"]);
    let r = &report(&out)["results"];
    assert_eq!(r["tree"]["tight"], true);
    assert_eq!(r["tree"]["check"]["valid"], true);
    assert_eq!(r["tau"]["value"], 1);
    assert_eq!(r["sigma"]["crosscut"], serde_json::json!([2]));
    assert_eq!(r["r_partition"].as_array().unwrap().len(), 3);
}

#[test]
fn sigma_lists_all_minimum_crosscuts() {
    let dir = TempDir::new().unwrap();
    let ex = construct(dir.path(), "twin_hub", "");
    let r = &report(&hg(&["sigma", p(&ex)]))["results"];
    assert_eq!(r["value"], 2);
    assert_eq!(
        r["minimum_crosscuts"],
        serde_json::json!([[0, 1], [2, 4], [3, 5]])
    );
}

#[test]
fn turan_and_budget_env() {
    let dir = TempDir::new().unwrap();
    let m2 = construct(dir.path(), "matching", "s=2,r=3");
    let out = hg(&["turan", "-n", "6", "-r", "3", "--forbid", p(&m2)]);
    let rep = report(&out);
    assert_eq!(rep["results"]["oracle"]["value"], 10);
    assert_eq!(rep["results"]["oracle"]["certified"], true);
    assert_eq!(rep["results"]["bounds"]["critical_formula"], 10);
    assert_eq!(rep["command"]["budget"], 10_000_000);

    let out = Command::new(env!("CARGO_BIN_EXE_hg"))
        .args(["turan", "-n", "6", "-r", "3", "--forbid", p(&m2)])
        .env("HG_BUDGET", "7")
        .output()
        .unwrap();
    assert_eq!(report(&out)["command"]["budget"], 7);
}

#[test]
fn verify_exit_codes() {
    let dir = TempDir::new().unwrap();
    let k35 = construct(dir.path(), "complete", "n=5,r=3");
    let out = hg(&["verify", "--prop", "kk", "--f", p(&k35), "-p", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["passed"], true);

    let c34 = construct(dir.path(), "linear_cycle", "m=4,r=3");
    let out = hg(&["verify", "--prop", "crosscut", "--h", p(&c34), "-n", "10"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["results"]["report"]["free"], true);

    let out = hg(&["verify", "--prop", "cover", "--h", p(&c34), "-n", "9"]);
    assert_eq!(out.status.code(), Some(0));

    // C34 is not a tree, so the tree-shadow bound does not apply
    let out = hg(&[
        "verify",
        "--prop",
        "tree-shadow",
        "--f",
        p(&k35),
        "--h",
        p(&c34),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());

    let m2 = construct(dir.path(), "matching", "s=2,r=3");
    let out = hg(&["verify", "--prop", "missing", "--f", p(&m2), "--h", p(&m2)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["results"]["isolated"], 0);
}

#[test]
fn precondition_errors_exit_two() {
    let dir = TempDir::new().unwrap();
    let m2 = construct(dir.path(), "matching", "s=2,r=3");
    let single = write(dir.path(), "one.json", r#"{"n": 6, "edges": [[0,1,2]]}"#);
    // F must avoid H for the tree-shadow bound
    let out = hg(&[
        "verify",
        "--prop",
        "tree-shadow",
        "--f",
        p(&m2),
        "--h",
        p(&single),
    ]);
    assert_eq!(out.status.code(), Some(2));
    // K_4^(3) has no cross-cut
    let k4 = construct(dir.path(), "complete", "n=4,r=3");
    let out = hg(&["verify", "--prop", "crosscut", "--h", p(&k4), "-n", "8"]);
    assert_eq!(out.status.code(), Some(2));
    let out = hg(&["verify", "--prop", "kk", "--f", p(&m2)]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn parse_and_usage_errors_exit_two() {
    let dir = TempDir::new().unwrap();
    let bad = write(dir.path(), "bad.json", "{not json");
    let out = hg(&["tau", p(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("parse error"));

    let out = hg(&["construct", "--family", "nope"]);
    assert_eq!(out.status.code(), Some(2));

    let out = hg(&["turan", "-n", "6"]);
    assert_eq!(out.status.code(), Some(2));

    let out = hg(&["tau", p(&dir.path().join("missing.json"))]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reports_are_deterministic_apart_from_timing() {
    let dir = TempDir::new().unwrap();
    let c34 = construct(dir.path(), "linear_cycle", "m=4,r=3");
    let run = || {
        let mut v = report(&hg(&["analyze", p(&c34)]));
        v.as_object_mut().unwrap().remove("timing");
        serde_json::to_string(&v).unwrap()
    };
    assert_eq!(run(), run());
    let digest = report(&hg(&["tau", p(&c34)]))["inputs_digest"].clone();
    assert_eq!(digest.as_str().unwrap().len(), 64);
    assert_eq!(digest, report(&hg(&["sigma", p(&c34)]))["inputs_digest"]);
}

#[test]
fn emitted_hypergraphs_round_trip() {
    let dir = TempDir::new().unwrap();
    for (family, params) in [
        ("linear_cycle", "m=4,r=3"),
        ("twin_hub", ""),
        ("complete_partite", "p=2,s=2"),
        ("tight_path", "m=4,r=3"),
    ] {
        let out = hg(&["construct", "--family", family, "--params", params]);
        let emitted = report(&out)["results"]["hypergraph"].clone();
        let path = write(dir.path(), "h.json", &emitted.to_string());
        let parsed =
            hypertree::Hypergraph::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
        assert_eq!(parsed.to_json_value(), emitted);

        let shadow = report(&hg(&["shadow", p(&path), "-p", "1"]))["results"]["shadow"].clone();
        assert!(hypertree::Hypergraph::from_json_value(shadow).is_ok());
    }
}

#[test]
fn homogeneous_uses_seed() {
    let dir = TempDir::new().unwrap();
    let c = construct(dir.path(), "C", "n=9,r=3,t=1");
    let run = |seed: &str| {
        report(&hg(&["homogeneous", p(&c), "-s", "2", "--seed", seed]))["results"].clone()
    };
    let a = run("3");
    assert_eq!(a, run("3"));
    assert_eq!(a["extraction"]["report"]["homogeneous"], true);
    assert!(a["size"].as_u64().unwrap() > 0);
}

#[test]
fn table_output() {
    let dir = TempDir::new().unwrap();
    let c34 = construct(dir.path(), "linear_cycle", "m=4,r=3");
    let out = hg(&["tau", p(&c34), "--table"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text
        .lines()
        .any(|l| l.starts_with("results.value") && l.ends_with('2')));
}
