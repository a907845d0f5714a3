use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn dompack(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_dompack"))
        .args(args)
        .env_remove("DOMPACK_SEED")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json_lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn compute_named_and_stdin() {
    let out = dompack(&["compute", "--named", "C4", "--fractional", "--format", "json"], None);
    assert!(out.status.success());
    let r = &json_lines(&out)[0];
    assert_eq!((r["gamma"].as_u64(), r["rho"].as_u64()), (Some(2), Some(1)));
    assert_eq!(r["gamma_f"], "4/3");

    let out = dompack(&["compute", "--named", "P7", "--format", "json"], None);
    let r = &json_lines(&out)[0];
    assert_eq!((r["gamma"].as_u64(), r["rho"].as_u64()), (Some(3), Some(3)));
    assert!(r.get("gamma_f").is_none());

    let out = dompack(&["compute", "--format", "json", "--fractional"], Some("C~\n@\n"));
    assert!(out.status.success());
    let rs = json_lines(&out);
    assert_eq!(rs.len(), 2);
    assert_eq!(rs[0]["n"], 4);
    assert_eq!(rs[0]["gamma"], 1);
    assert_eq!(rs[1]["n"], 1);
    assert_eq!(rs[1]["rho"], 1);
    assert_eq!(rs[1]["gamma_f"], "1");
}

#[test]
fn compute_with_x() {
    let out = dompack(&["compute", "--named", "P3", "--x-set", "0,2", "--format", "json"], None);
    assert!(out.status.success());
    let r = &json_lines(&out)[0];
    assert_eq!((r["gamma_x"].as_u64(), r["rho_x"].as_u64()), (Some(1), Some(1)));
}

#[test]
fn bad_input_fails() {
    let out = dompack(&["compute"], Some("not a graph {\n"));
    assert_eq!(out.status.code(), Some(2));
    let out = dompack(&["compute", "--named", "C4", "--x-set", "9"], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not a subset"));
    let out = dompack(&["compute"], Some(""));
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_tree_passes() {
    let out = dompack(&["verify", "--class", "tree", "--count", "30"], None);
    assert!(out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("0 violations"), "{err}");
}

#[test]
fn verify_rook_reports_violations() {
    let out = dompack(&["verify", "--class", "rook", "--n", "3..5", "--count", "3", "--bound", "1"], None);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("max γ/ρ = 5"), "{err}");
}

#[test]
fn verify_records_replay() {
    let out = dompack(&["verify", "--class", "planar", "--count", "5", "--format", "json", "--seed", "42"], None);
    assert!(out.status.success());
    for r in json_lines(&out) {
        let spec: dompack::generators::GenSpec = serde_json::from_value(r["genspec"].clone()).unwrap();
        let g = dompack::generators::generate(&spec).unwrap().graph;
        assert_eq!(dompack::io::emit_graph6(&g), r["graph6"].as_str().unwrap());
    }
}

#[test]
fn seed_from_environment() {
    let run = |env: Option<&str>, args: &[&str]| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_dompack"));
        cmd.args(["verify", "--class", "any", "--count", "4", "--format", "csv"]).args(args);
        match env {
            Some(s) => cmd.env("DOMPACK_SEED", s),
            None => cmd.env_remove("DOMPACK_SEED"),
        };
        cmd.output().unwrap().stdout
    };
    assert_eq!(run(Some("7"), &[]), run(None, &["--seed", "7"]));
    assert_ne!(run(Some("7"), &[]), run(None, &[]));
}

#[test]
fn construct_certificates() {
    let out = dompack(&["construct", "--class", "chordal-bipartite", "--named", "C4", "--format", "json"], None);
    assert!(out.status.success());
    let c = &json_lines(&out)[0];
    assert_eq!(c["D"].as_array().unwrap().len(), 2);
    assert_eq!(c["P"].as_array().unwrap().len(), 1);
    assert_eq!(c["valid"], true);

    let out = dompack(&["construct", "--class", "tree", "--named", "P7", "--format", "json"], None);
    let c = &json_lines(&out)[0];
    assert_eq!(c["D"].as_array().unwrap().len(), 3);
    assert_eq!(c["P"].as_array().unwrap().len(), 3);

    let out = dompack(&["construct", "--class", "tree", "--named", "C5"], None);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn search_small_targets() {
    for target in ["1", "2"] {
        let out = dompack(&["search", "--target", target, "--n", "10", "--format", "json"], None);
        assert!(out.status.success(), "target {target}");
        assert_eq!(json_lines(&out)[0]["found"], true);
    }
}

#[test]
fn search_finds_ratio_three() {
    let out = dompack(&["search", "--target", "3", "--n", "9", "--format", "json"], None);
    assert!(out.status.success());
    let r = &json_lines(&out)[0]["best"];
    assert_eq!((r["gamma"].as_u64(), r["rho"].as_u64()), (Some(3), Some(1)));
}

#[test]
fn construct_interval_instance() {
    let out = dompack(&["verify", "--class", "strongly-chordal", "--count", "20", "--format", "json"], None);
    assert!(out.status.success());
    for r in json_lines(&out) {
        let cert = &r["certificate"];
        assert_eq!(cert["D"].as_array().unwrap().len(), cert["P"].as_array().unwrap().len());
    }
}

#[test]
fn lemmachecks_pass() {
    for lemma in ["triangulate", "discharge", "charge-audit"] {
        let out = dompack(&["lemmacheck", lemma, "--count", "30", "--n", "6..20"], None);
        assert!(out.status.success(), "{lemma}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn output_file() {
    let dir = std::env::temp_dir().join(format!("dompack-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("out.csv");
    let out = dompack(&["compute", "--named", "K3,3", "--format", "csv", "--out", path.to_str().unwrap()], None);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("index,graph6"));
    std::fs::remove_dir_all(&dir).unwrap();
}
