use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn homforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_homforge"))
        .args(args)
        .env_remove("HOMFORGE_BUDGET_MS")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = homforge(&full);
    let doc = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stdout));
    });
    (out.status.code().unwrap(), doc)
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn generated_files_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = dir.path().join("c5.dimacs");
    std::fs::write(&c5, "c five-cycle\np edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n").unwrap();
    let grid = dir.path().join("grid.json");
    assert!(homforge(&["gen", "grid", "3", "-o", path(&grid)]).status.success());

    let (code, doc) = json(&["hom", "find", path(&c5), "clique:3"]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"], "found");
    assert_eq!(doc["homomorphism"].as_object().unwrap().len(), 5);

    let (code, doc) = json(&["hom", "td", path(&grid), "clique:2"]);
    assert_eq!((code, doc["result"].as_str()), (0, Some("found")));
    let (code, doc) = json(&["hom", "count", path(&c5), "clique:2"]);
    assert_eq!((code, doc["count"].as_u64()), (0, Some(0)));

    let core = dir.path().join("core.json");
    let (code, _) = json(&["core", path(&grid), "-o", path(&core)]);
    assert_eq!(code, 0);
    let (_, doc) = json(&["hom", "count", path(&core), path(&core)]);
    assert_eq!(doc["count"], 2);
}

#[test]
fn treewidth_and_minors() {
    let (code, doc) = json(&["tw", "exact", "grid:4:4"]);
    assert_eq!((code, doc["width"].as_i64()), (0, Some(4)));
    let (code, doc) = json(&["tw", "heur", "clique:5"]);
    assert_eq!((code, doc["width"].as_i64()), (0, Some(4)));

    let dir = tempfile::tempdir().unwrap();
    let mu = dir.path().join("mu.json");
    let out = homforge(&["minor", "grid", "grid:3:4", "-k", "3", "-o", path(&mu)]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let saved: Value = serde_json::from_str(&std::fs::read_to_string(&mu).unwrap()).unwrap();
    assert_eq!(saved["assignment"].as_object().unwrap().len(), 9);
    assert_eq!(
        homforge(&["minor", "grid", "grid:3:3", "-k", "4"]).status.code(),
        Some(1)
    );
}

#[test]
fn reductions_and_sweeps() {
    let (code, doc) = json(&["reduce", "pcsp", "--template", "grid:2:3", "--G", "clique:3"]);
    assert_eq!(code, 0);
    assert!(doc["elements"].as_u64().unwrap() > 0);
    let (code, doc) = json(&["reduce", "amplify", "--G", "clique:3", "-k", "3", "-l", "5"]);
    assert_eq!((code, doc["m"].as_u64(), doc["edges"].as_u64()), (0, Some(2), Some(15)));

    let (code, doc) = json(&["verify", "--kind", "amplify", "-k", "3", "-l", "5", "--max-n", "4"]);
    assert_eq!(code, 0);
    assert_eq!(doc["instances"], 1 + 2 + 8 + 64);
    let (code, doc) = json(&[
        "verify",
        "--kind",
        "grohe",
        "--A",
        "typed_grid:3",
        "-k",
        "3",
        "--max-n",
        "3",
    ]);
    assert_eq!(code, 0, "{doc}");
    assert!(doc["counterexamples"].as_array().unwrap().is_empty());
}

#[test]
fn failures_use_exit_codes() {
    let out = homforge(&["hom", "find", "clique:3", "clique:2"]);
    assert_eq!(out.status.code(), Some(1));
    let out = homforge(&[
        "--node-limit",
        "1",
        "verify",
        "--kind",
        "grohe",
        "--A",
        "typed_grid:3",
        "-k",
        "3",
        "--max-n",
        "4",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let out = homforge(&["reduce", "pcsp", "--template", "grid:3:2", "--G", "clique:3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error: InvalidDimension"));
    let out = homforge(&["tw", "exact", "clique:19"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(homforge(&["frobnicate"]).status.code(), Some(2));
}
