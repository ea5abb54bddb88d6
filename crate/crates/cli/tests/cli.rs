use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use sgm_core::catalog;
use sgm_core::matroid::{apply_minor, is_isomorphic, MinorWitness};
use sgm_core::{BinaryMatroid, Multigraph, SignedGraph};

const B: usize = sgm_core::DEFAULT_ELEMENT_BOUND;

fn sgm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sgm"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf8 stderr")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).expect("temp file");
    path.to_str().expect("utf8 path").to_owned()
}

#[test]
fn rank_of_the_r15_matrix_is_seven() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "r15.txt", &catalog::r15().to_text());
    let out = sgm(&["rank", &path]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "7\n");

    let out = sgm(&["--format", "json", "rank", &path]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["rank"], 7);
}

#[test]
fn graph_files_stand_for_their_bond_matroid() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "k4.graph", &catalog::complete_graph(4).to_text());
    let out = sgm(&["cocircuits", &path]);
    assert!(out.status.success());
    // Cocircuits of M*(K4) are the circuits of M(K4): 4 triangles, 3 quads.
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 7);
    assert_eq!(lines[0], "v1-v2 v1-v3 v2-v3");
}

#[test]
fn dual_output_parses_back_to_the_dual() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = catalog::complete_graph(4);
    let path = write(dir.path(), "mk4.txt", &k4.cycle_matroid().unwrap().to_text());
    let out = sgm(&["dual", &path]);
    assert!(out.status.success());
    let parsed = BinaryMatroid::from_text(&stdout(&out)).unwrap();
    assert_eq!(parsed, k4.bond_matroid().unwrap());
}

#[test]
fn minor_test_witnesses_replay() {
    let dir = tempfile::tempdir().unwrap();
    let host = catalog::g17().bond_matroid().unwrap();
    let target = catalog::complete_graph(4).cycle_matroid().unwrap();
    let hp = write(dir.path(), "host.txt", &host.to_text());
    let tp = write(dir.path(), "target.txt", &target.to_text());

    let out = sgm(&["--format", "json", "minor-test", &hp, &tp]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["found"], true);
    let w: MinorWitness = serde_json::from_value(v["witness"].clone()).unwrap();
    let shrunk = apply_minor(&host, &w).unwrap();
    assert!(is_isomorphic(&shrunk, &target, B).unwrap().is_some());

    let out = sgm(&["minor-test", &tp, &hp]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "no minor\n");
}

#[test]
fn recognize_decides_and_keeps_exit_zero() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(
        dir.path(),
        "mk35.txt",
        &catalog::g17().bond_matroid().unwrap().to_text(),
    );
    let out = sgm(&["recognize", &bad]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("not signed-graphic\n"));

    let out = sgm(&["--format", "json", "recognize", &bad]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["decision"], "not-signed-graphic");
    assert_eq!(v["pieces"][0]["family"]["K3n"]["n"], 5);

    let good = write(
        dir.path(),
        "mw5.txt",
        &catalog::wheel(5).bond_matroid().unwrap().to_text(),
    );
    let out = sgm(&["recognize", &good]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("signed-graphic\n"));
}

#[test]
fn recognize_rejects_non_cographic_input_when_checking() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "f7.txt", &catalog::fano().to_text());
    let out = sgm(&["recognize", &path, "--check-preconditions"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("precondition"));
}

#[test]
fn every_catalog_entry_round_trips() {
    let out = sgm(&["catalog", "--list"]);
    assert!(out.status.success());
    let names: Vec<String> = stdout(&out).lines().map(str::to_owned).collect();
    assert!(names.iter().any(|n| n == "R15"));
    for name in names {
        let out = sgm(&["--format", "json", "catalog", &name]);
        assert!(out.status.success(), "catalog {name} failed");
        let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        let text = v["text"].as_str().unwrap();
        let reprinted = match v["kind"].as_str().unwrap() {
            "graph" => Multigraph::parse(text).unwrap().to_text(),
            "matroid" => BinaryMatroid::from_text(text).unwrap().to_text(),
            "signed-graph" => SignedGraph::parse(text).unwrap().to_text(),
            other => panic!("unknown kind {other}"),
        };
        assert_eq!(reprinted, text, "round trip changed {name}");
    }
}

#[test]
fn decompose_splits_a_two_sum() {
    let dir = tempfile::tempdir().unwrap();
    let a = catalog::wheel(3).cycle_matroid().unwrap();
    let b = catalog::complete_graph(4).cycle_matroid().unwrap();
    let m = a.two_sum(&b, "h-r1", "v1-v2", B).unwrap();
    let path = write(dir.path(), "sum.txt", &m.to_text());

    let out = sgm(&["--format", "json", "decompose", &path]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let pieces = v.as_array().unwrap();
    assert_eq!(pieces.len(), 2);
    for p in pieces {
        let labels = p["labels"].as_array().unwrap();
        assert_eq!(labels.len(), 6);
        assert!(labels.iter().any(|l| l.as_str().unwrap() == "~sum0"));
    }
}

#[test]
fn realize_emits_a_parseable_graph() {
    let dir = tempfile::tempdir().unwrap();
    let m = catalog::g17().cycle_matroid().unwrap();
    let path = write(dir.path(), "mk35.txt", &m.to_text());
    let out = sgm(&["realize", &path]);
    assert!(out.status.success());
    let g = Multigraph::parse(&stdout(&out)).unwrap();
    assert_eq!(g.cycle_matroid().unwrap(), m);
}

#[test]
fn closure_manifest_carries_the_derivations() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("closure");
    let out = sgm(&[
        "negami-closure",
        "k4.4-e",
        "--max-edges",
        "16",
        "--out",
        out_dir.to_str().unwrap(),
    ]);
    assert!(out.status.success());

    let manifest = fs::read_to_string(out_dir.join("manifest.json")).unwrap();
    let records: Vec<serde_json::Value> = serde_json::from_str(&manifest).unwrap();
    assert_eq!(records.len(), 5);
    assert!(records[0]["parent"].is_null());
    assert_eq!(records[0]["derivation"], "seed");
    for (i, r) in records.iter().enumerate().skip(1) {
        assert!((r["parent"].as_u64().unwrap() as usize) < i);
        let file = r["file"].as_str().unwrap();
        let g = Multigraph::parse(&fs::read_to_string(out_dir.join(file)).unwrap())
            .unwrap();
        assert_eq!(g.edges().len(), r["edges"].as_u64().unwrap() as usize);
    }

    // Re-adding the missing edge is the only one-step route to K4,4.
    let k44_row = records
        .iter()
        .find(|r| r["step"]["O1"].is_object())
        .and_then(|r| r["file"].as_str())
        .map(|f| fs::read_to_string(out_dir.join(f)).unwrap())
        .expect("an O1 child");
    let g = Multigraph::parse(&k44_row).unwrap();
    assert!(sgm_core::graph::graph_iso(&g, &catalog::complete_bipartite(4, 4)).is_some());
}

#[test]
fn verify_harnesses_report_pass() {
    let out = sgm(&["verify", "counterexamples"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("R15*"), "missing R15* line: {text}");
    assert!(text.contains("R16*"));
    assert!(text.contains("PASS"));

    let out = sgm(&[
        "verify",
        "families",
        "--n-max",
        "5",
        "--max-edges",
        "16",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("PASS"));
}

#[test]
fn failure_exit_codes_are_distinct() {
    let out = sgm(&["rank", "/definitely/not/a/file"]);
    assert_eq!(out.status.code(), Some(1));

    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "bad.txt", "one two three\n");
    let out = sgm(&["rank", &path]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("parsing"));

    let out = sgm(&["negami-closure", "w4", "--max-edges", "16"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("wheel"));

    let out = sgm(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}
