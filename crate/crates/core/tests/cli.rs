//! End-to-end checks of the command line.

use std::process::Command;

fn shearq(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_shearq"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn tmp(name: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("shearq-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn list_suites_is_stable_and_names_anchors() {
    let a = shearq(&["list-suites"]);
    let b = shearq(&["list-suites"]);
    assert!(a.status.success());
    let text = String::from_utf8(a.stdout.clone()).unwrap();
    assert!(text.contains("an-nelson-regge"));
    assert!(text.contains("R-matrix form"));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(text.lines().count(), 8);
}

#[test]
fn empty_suite_list_is_a_usage_error() {
    let out = shearq(&["run"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("no suite"));
}

#[test]
fn unknown_suite_is_rejected_before_work() {
    let report = tmp("unknown.json");
    let out = shearq(&[
        "run",
        "--suite",
        "pvi",
        "--suite",
        "bogus",
        "--report",
        report.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("bogus"));
    assert!(!report.exists());
}

#[test]
fn pvi_report_passes_with_environment_block() {
    let report = tmp("pvi.json");
    let out = shearq(&[
        "run",
        "--suite",
        "pvi",
        "--report",
        report.to_str().unwrap(),
        "--seed",
        "3",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["schema"], "shearq-report/1");
    assert_eq!(v["environment"]["seed"], 3);
    assert_eq!(v["environment"]["moduli"], serde_json::json!([5, 7]));
    let reps = v["reports"].as_array().unwrap();
    let k = reps.iter().find(|r| r["id"] == "pvi/pvi/K1K2").unwrap();
    assert_eq!(k["status"], "pass");
}

#[test]
fn graph_validation_failure_names_the_edge_formula() {
    let g = tmp("bad.json");
    std::fs::write(
        &g,
        r#"{"edges":["X","Y","Z"],"vertices":[["X","Y","Z"]],
           "pending":{"X":{"param":"a"},"Y":{"param":"b"},"Z":{"param":"c"}},
           "meta":{"g":0,"s":1,"r":4}}"#,
    )
    .unwrap();
    let report = tmp("bad-report.json");
    let out = shearq(&[
        "run",
        "--suite",
        "graph-validate",
        g.to_str().unwrap(),
        "--report",
        report.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = std::fs::read_to_string(&report).unwrap();
    assert!(text.contains("6g−6+3s+2r"));
}

#[test]
fn bundled_graphs_validate_and_exit_zero() {
    let out = shearq(&["run", "--suite", "graph-validate", "--jobs", "2"]);
    assert!(out.status.success());
}

#[test]
fn failing_identities_give_exit_one() {
    let out = shearq(&["run", "--suite", "an-nelson-regge"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn reports_are_reproducible_without_timings() {
    let (a, b) = (tmp("a.json"), tmp("b.json"));
    for p in [&a, &b] {
        shearq(&[
            "run",
            "--suite",
            "an-core",
            "--suite",
            "pvi",
            "--seed",
            "9",
            "--no-timings",
            "--report",
            p.to_str().unwrap(),
        ]);
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn flip_script_runs_inside_flips_quantum() {
    let s = tmp("script.txt");
    std::fs::write(&s, "flip X1\npflip S\n").unwrap();
    let report = tmp("script.json");
    shearq(&[
        "run",
        "--suite",
        "flips-quantum",
        "--flips",
        s.to_str().unwrap(),
        "--samples",
        "10",
        "--report",
        report.to_str().unwrap(),
    ]);
    let text = std::fs::read_to_string(&report).unwrap();
    assert!(text.contains("script/1/flip-X1/homomorphism"));
    assert!(text.contains("script/2/pflip-S/star-equivariance"));
}

#[test]
fn bad_modulus_is_rejected() {
    let out = shearq(&["run", "--suite", "pvi", "--oracle-mod", "2,5"]);
    assert_eq!(out.status.code(), Some(2));
}
