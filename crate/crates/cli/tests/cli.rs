use std::path::PathBuf;
use std::process::{Command, Output};

use foldcube::boolean_group::folded_cube;
use foldcube::Graph;
use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

fn foldcube(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_foldcube"))
        .args(args)
        .env_remove("QSYM_SEED")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn clebsch_fixture_is_the_folded_5_cube() {
    let text = std::fs::read_to_string(fixture("clebsch.json")).unwrap();
    assert_eq!(Graph::from_json(&text).unwrap(), folded_cube(5).unwrap());
}

#[test]
fn spectra_n5_levels() {
    let out = foldcube(&["spectra", "--n", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let levels: Vec<(i64, u64)> = v["levels"]
        .as_array()
        .unwrap()
        .iter()
        .map(|l| {
            (
                l["lambda"].as_i64().unwrap(),
                l["multiplicity"].as_u64().unwrap(),
            )
        })
        .collect();
    assert_eq!(levels, vec![(5, 1), (1, 10), (-3, 5)]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("PASS"));
}

#[test]
fn spectra_of_a_graph_file() {
    let out = foldcube(&["spectra", "--graph", fixture("k4.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["levels"][0]["lambda"], 3.0);
    assert_eq!(v["levels"][1]["multiplicity"], 3);
}

#[test]
fn autos_counts() {
    for (file, count) in [("k4.json", 24), ("c5.json", 10), ("clebsch.json", 1920)] {
        let out = foldcube(&["autos", "--graph", fixture(file).to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{file}");
        assert_eq!(json(&out)["count"], count, "{file}");
    }
}

#[test]
fn disjoint_exit_codes() {
    let out = foldcube(&[
        "disjoint",
        "--graph",
        fixture("clebsch.json").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["found"], true);
    let out = foldcube(&["disjoint", "--graph", fixture("c5.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["found"], false);
}

#[test]
fn witness_on_clebsch_and_k4() {
    for file in ["clebsch.json", "k4.json"] {
        let out = foldcube(&[
            "witness",
            "--graph",
            fixture(file).to_str().unwrap(),
            "--seed",
            "42",
        ]);
        assert_eq!(out.status.code(), Some(0), "{file}");
        let v = json(&out);
        assert_eq!(v["report"]["pass"], true);
        assert_eq!(v["report"]["seed"], 42);
        assert!(v["report"]["noncomm_certificate"].as_f64().unwrap() > 0.01);
        assert_eq!(v["recovery"]["pass"], true);
    }
    let out = foldcube(&["witness", "--graph", fixture("c5.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn so_commands() {
    let out = foldcube(&["so-points", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["count"], 24);
    let out = foldcube(&["so-check", "--n", "3", "--samples", "20"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );
    let v = json(&out);
    assert_eq!(v["lemma_so"]["determinant_positive"], 24);
    assert_eq!(v["action"]["bijective"], true);
    let out = foldcube(&["twist-check", "--m", "1", "--samples", "50", "--seed", "42"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["pass"], true);
}

#[test]
fn tolerance_override_can_fail_a_check() {
    // A negative tolerance is rejected; a zero tolerance makes sampled
    // floating-point defects fail.
    let out = foldcube(&["--tol", "-1", "twist-check", "--m", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = foldcube(&["twist-check", "--m", "2", "--tol", "0"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["pass"], false);
}

#[test]
fn usage_and_parse_errors_exit_2() {
    assert_eq!(foldcube(&["spectra"]).status.code(), Some(2));
    assert_eq!(
        foldcube(&["spectra", "--n", "5", "--graph", "x.json"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(foldcube(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        foldcube(&["twist-check", "--m", "7"]).status.code(),
        Some(2)
    );
    assert_eq!(foldcube(&["so-points", "--n", "9"]).status.code(), Some(2));
    assert_eq!(
        foldcube(&["autos", "--graph", "/nonexistent/graph.json"])
            .status
            .code(),
        Some(2)
    );

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"n": 3, "edges": [[0, 3]]}"#).unwrap();
    let out = foldcube(&["autos", "--graph", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(json(&out)["error"].as_str().unwrap().contains("parse"));
    std::fs::write(&bad, "not json").unwrap();
    assert_eq!(
        foldcube(&["disjoint", "--graph", bad.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn seed_falls_back_to_environment() {
    let run = |env: Option<&str>, args: &[&str]| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_foldcube"));
        cmd.args(args).env_remove("QSYM_SEED");
        if let Some(s) = env {
            cmd.env("QSYM_SEED", s);
        }
        cmd.output().unwrap()
    };
    let flag = run(
        None,
        &["twist-check", "--m", "1", "--samples", "5", "--seed", "7"],
    );
    let env = run(Some("7"), &["twist-check", "--m", "1", "--samples", "5"]);
    assert_eq!(flag.stdout, env.stdout);
    assert_eq!(json(&env)["seed"], 7);
    let default = run(None, &["twist-check", "--m", "1", "--samples", "5"]);
    assert_eq!(json(&default)["seed"], 42);
}

#[test]
fn output_is_byte_identical_across_runs() {
    let k4 = fixture("k4.json");
    let clebsch = fixture("clebsch.json");
    let cases: Vec<Vec<&str>> = vec![
        vec!["spectra", "--n", "7"],
        vec!["autos", "--graph", k4.to_str().unwrap()],
        vec!["disjoint", "--graph", clebsch.to_str().unwrap()],
        vec![
            "witness",
            "--graph",
            clebsch.to_str().unwrap(),
            "--seed",
            "3",
        ],
        vec!["so-points", "--n", "3"],
        vec!["so-check", "--n", "3", "--samples", "10", "--seed", "9"],
        vec!["twist-check", "--m", "2", "--samples", "10", "--seed", "9"],
    ];
    for args in cases {
        let a = foldcube(&args);
        let b = foldcube(&args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.status.code(), b.status.code());
    }
}
