use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn ybh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ybh")).args(args).env_remove("YBH_MAX_DIM").output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(format!("{name}.json"))
}

fn fixture_names() -> Vec<String> {
    let listing = ybh(&["construct", "--list"]);
    assert_eq!(code(&listing), 0);
    String::from_utf8(listing.stdout).unwrap().lines().map(|l| l.split('\t').next().unwrap().to_string()).collect()
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("not JSON ({e}): {}", String::from_utf8_lossy(&out.stdout)))
}

fn edited(dir: &TempDir, name: &str, edit: impl FnOnce(&mut Value)) -> String {
    let mut doc: Value = serde_json::from_str(&std::fs::read_to_string(fixture(name)).unwrap()).unwrap();
    edit(&mut doc);
    let path = dir.path().join(format!("edited_{name}.json"));
    std::fs::write(&path, serde_json::to_string(&doc).unwrap()).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn shipped_fixtures_match_construct_output() {
    let names = fixture_names();
    assert_eq!(names.len(), 12);
    for name in names {
        let out = ybh(&["construct", "--fixture", &name]);
        assert_eq!(code(&out), 0, "{name}");
        let shipped = std::fs::read_to_string(fixture(&name)).unwrap();
        assert_eq!(String::from_utf8(out.stdout).unwrap(), shipped, "{name}");
    }
}

#[test]
fn every_fixture_checks_clean() {
    for name in fixture_names() {
        let path = fixture(&name);
        let out = ybh(&["check", path.to_str().unwrap()]);
        assert_eq!(code(&out), 0, "{name}: {}", String::from_utf8_lossy(&out.stdout));
        let rep = report(&out);
        assert_eq!(rep["pass"], Value::Bool(true), "{name}");
    }
}

#[test]
fn save_then_load_round_trips() {
    let dir = TempDir::new().unwrap();
    for name in ["z2_adjoint", "heap_z2", "dual_numbers_hopf"] {
        let path = dir.path().join(format!("{name}.json"));
        let out = ybh(&["construct", "--fixture", name, "--out", path.to_str().unwrap()]);
        assert_eq!(code(&out), 0);
        assert!(out.stdout.is_empty());
        assert_eq!(std::fs::read(&path).unwrap(), std::fs::read(fixture(name)).unwrap());
        let checked = ybh(&["check", path.to_str().unwrap()]);
        assert_eq!(code(&checked), 0, "{name}");
    }
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let good = fixture("heap_z2");
    let good = good.to_str().unwrap();
    assert_eq!(code(&ybh(&["check", good])), 0);

    let non_associative = edited(&dir, "heap_z2", |doc| doc["mu"][0][3] = Value::from("2"));
    let out = ybh(&["check", &non_associative]);
    assert_eq!(code(&out), 1);
    assert_eq!(report(&out)["checks"]["associativity"]["pass"], Value::Bool(false));

    // The identity braiding satisfies Yang-Baxter but neither compatibility axiom.
    let unbraided = edited(&dir, "heap_z2", |doc| {
        doc["R"] = Value::Array((0..4).flat_map(|a| (0..4).map(move |b| serde_json::json!([a, b, a, b, "1"]))).collect());
    });
    let out = ybh(&["check", &unbraided]);
    assert_eq!(code(&out), 1);
    let rep = report(&out);
    assert_eq!(rep["checks"]["yang-baxter"]["pass"], Value::Bool(true));
    assert_eq!(rep["checks"]["yi"]["pass"], Value::Bool(false));
    assert_eq!(code(&ybh(&["cohomology", &unbraided])), 1);

    let truncated = dir.path().join("truncated.json");
    let text = std::fs::read_to_string(good).unwrap();
    std::fs::write(&truncated, &text[..text.len() / 2]).unwrap();
    let out = ybh(&["check", truncated.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line"));

    let out_of_range = edited(&dir, "heap_z2", |doc| doc["mu"][0][0] = Value::from(4));
    assert_eq!(code(&ybh(&["check", &out_of_range])), 2);
    assert_eq!(code(&ybh(&["check", dir.path().join("missing.json").to_str().unwrap()])), 2);
    assert_eq!(code(&ybh(&["check", good, "--frobnicate"])), 2);
    assert_eq!(code(&ybh(&["check", good, "--field", "reals"])), 2);
    assert_eq!(code(&ybh(&["cohomology", good, "--degree", "4"])), 2);

    let big = fixture("heap_z3");
    let out = ybh(&["cohomology", big.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("--slow"), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(code(&ybh(&["cohomology", good, "--degree", "3", "--max-dim", "3"])), 2);
    assert_eq!(code(&ybh(&["--help"])), 0);
}

#[test]
fn guard_can_come_from_the_environment() {
    let good = fixture("heap_z2");
    let out = Command::new(env!("CARGO_BIN_EXE_ybh"))
        .args(["cohomology", good.to_str().unwrap()])
        .env("YBH_MAX_DIM", "3")
        .output()
        .unwrap();
    assert_eq!(code(&out), 2);
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let path = fixture("dual_numbers_trivial");
    let path = path.to_str().unwrap();
    for args in [
        vec!["cohomology", path, "--degree", "3", "--iota"],
        vec!["deform", path, "--seed", "3", "--trials", "5"],
        vec!["check", path],
    ] {
        let a = ybh(&args);
        let b = ybh(&args);
        assert_eq!(code(&a), 0, "{args:?}: {}", String::from_utf8_lossy(&a.stdout));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert!(String::from_utf8_lossy(&a.stderr).contains("elapsed:"));
        assert!(!String::from_utf8_lossy(&a.stdout).contains("elapsed"));
    }
}

#[test]
fn dual_numbers_cohomology_over_f2() {
    let path = fixture("dual_numbers_trivial");
    let out = ybh(&["cohomology", path.to_str().unwrap(), "--degree", "3"]);
    assert_eq!(code(&out), 0);
    let rep = report(&out);
    assert_eq!(rep["field"], Value::from("F2"));
    assert_eq!(rep["h2"], Value::from(6));
    assert_eq!(rep["h2_basis"].as_array().unwrap().len(), 6);
    assert_eq!(rep["h3"], Value::from(26));
    // Characteristic 2 contributes four classes that are absent over the rationals.
    let out = ybh(&["cohomology", path.to_str().unwrap(), "--field", "q"]);
    assert_eq!(report(&out)["h2"], Value::from(2));
}

#[test]
fn deform_reports_quadratic_outcomes() {
    let path = fixture("dual_numbers_trivial");
    let out = ybh(&["deform", path.to_str().unwrap(), "--trials", "4"]);
    assert_eq!(code(&out), 0);
    let rep = report(&out);
    let cocycles = rep["cocycles"].as_array().unwrap();
    assert_eq!(cocycles.len(), 8);
    let obstructed = cocycles.iter().filter(|c| c["extends"] == Value::Bool(false)).count();
    assert_eq!(obstructed, 2);
    assert_eq!(rep["checks"]["trivialization"]["pass"], Value::Bool(true));
}

#[test]
fn hopf_document_reports_psi() {
    let path = fixture("dual_numbers_hopf");
    let out = ybh(&["cohomology", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stdout));
    assert!(report(&out).get("psi").is_some());
}

#[test]
fn construct_from_a_construction_file() {
    let dir = TempDir::new().unwrap();
    let recipe = dir.path().join("c.json");
    std::fs::write(&recipe, r#"{"kind": "heap", "group": {"table": [[0, 1], [1, 0]], "labels": ["e", "a"]}}"#).unwrap();
    let out = ybh(&["construct", "--from", recipe.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), std::fs::read_to_string(fixture("heap_z2")).unwrap());
    std::fs::write(&recipe, r#"{"kind": "heap", "group": {"table": [[0, 1], [0, 1]]}}"#).unwrap();
    assert_ne!(code(&ybh(&["construct", "--from", recipe.to_str().unwrap()])), 0);
    assert_eq!(code(&ybh(&["construct", "--fixture", "nope"])), 2);
}

#[test]
fn selftest_passes() {
    let out = ybh(&["selftest", "--seed", "7", "--prime", "101", "--trials", "10"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stdout));
    let rep = report(&out);
    assert_eq!(rep["pass"], Value::Bool(true));
    assert_eq!(rep["field"], Value::from("F101"));
}
