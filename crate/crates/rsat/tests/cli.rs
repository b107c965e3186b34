use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn rsat(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rsat"))
        .args(args)
        .current_dir(dir)
        .env_remove("RSAT_JOBS")
        .output()
        .expect("binary runs")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("bad JSON ({e}): {}\n{}", String::from_utf8_lossy(&out.stdout), String::from_utf8_lossy(&out.stderr))
    })
}

fn without_time(out: &Output) -> Vec<String> {
    String::from_utf8_lossy(&out.stdout).lines().filter(|l| !l.contains("wall_time_ms")).map(str::to_owned).collect()
}

fn step<'a>(rep: &'a Value, name: &str) -> &'a Value {
    rep["steps"].as_array().unwrap().iter().find(|s| s["name"] == name).unwrap_or_else(|| panic!("no step {name}"))
}

#[test]
fn construct_m6_has_three_doubled_classes() {
    let dir = tempfile::tempdir().unwrap();
    let out = rsat(&["construct", "--family", "m", "--n", "6", "--out", "."], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let rep = report(&out);
    assert_eq!(rep["schema"], "rsat-report/1");
    let d = &step(&rep, "construct")["detail"];
    assert_eq!(d["edges"], 9);
    assert_eq!(d["closed_form_edges"], 9);
    assert_eq!(d["colors"], 6);
    assert_eq!(d["doubled_classes"], 3);
    assert!(dir.path().join("m-6.g6").exists());
    assert!(dir.path().join("m-6.col").exists());
}

#[test]
fn construct_then_verify_omega() {
    let dir = tempfile::tempdir().unwrap();
    let out = rsat(&["construct", "--family", "omega", "--n", "16", "--out", "."], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let label = report(&out)["steps"][0]["detail"]["family"].as_str().unwrap().to_owned();
    let g6 = format!("{label}.g6");
    let col = format!("{label}.col");
    let out = rsat(&["verify", &g6, "--r", "5", "--coloring", &col], dir.path());
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let rep = report(&out);
    assert_eq!(rep["outcome"], "pass");
    assert_eq!(rep["inputs"].as_array().unwrap().len(), 2);
    assert_eq!(rep["inputs"][0]["sha256"].as_str().unwrap().len(), 64);
    assert_eq!(step(&rep, "saturation")["detail"]["verdict"], "saturated");
    assert_eq!(step(&rep, "structure")["detail"]["xi_membership"]["member"], true);
}

#[test]
fn verify_rejects_w4_and_reports_the_nonedge() {
    let dir = tempfile::tempdir().unwrap();
    rsat(&["construct", "--family", "w", "--n", "4", "--out", "."], dir.path());
    let out = rsat(&["verify", "w-4.g6", "--r", "5", "--rainbow"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    let rep = report(&out);
    assert_eq!(rep["outcome"], "fail");
    let sat = &step(&rep, "saturation")["detail"];
    assert_eq!(sat["verdict"], "unsaturated");
    assert_eq!(sat["failing_color"], "fresh");
    assert_eq!(step(&rep, "rainbow_criterion")["pass"], true);
}

#[test]
fn reports_are_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    rsat(&["construct", "--family", "s", "--n", "9", "--out", "."], dir.path());
    let a = rsat(&["verify", "s-9.g6", "--r", "6", "--coloring", "s-9.col"], dir.path());
    let b = rsat(&["verify", "s-9.g6", "--r", "6", "--coloring", "s-9.col"], dir.path());
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(without_time(&a), without_time(&b));
    let last = String::from_utf8_lossy(&a.stdout).lines().rev().nth(1).unwrap().to_owned();
    assert!(last.trim_start().starts_with("\"wall_time_ms\""), "{last}");
}

#[test]
fn witness_replay_uses_bundled_tables() {
    let dir = tempfile::tempdir().unwrap();
    rsat(&["construct", "--family", "gamma", "--n", "10", "--n1", "5", "--out", "."], dir.path());
    let wit = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/gamma10.wit");
    let out = rsat(&["witness", "gamma-10-5.5.g6", wit.to_str().unwrap()], dir.path());
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    assert_eq!(report(&out)["steps"].as_array().unwrap().len(), 3);

    std::fs::write(dir.path().join("bad.wit"), "cycle 7\nnonedge 4 5\nmode pair\npath 4 0 3 7 2 1 5\npath 4 0 3 7 2 1 5\n").unwrap();
    let out = rsat(&["witness", "gamma-10-5.5.g6", "bad.wit"], dir.path());
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn search_exact_and_budget_exhaustion() {
    let dir = tempfile::tempdir().unwrap();
    let out = rsat(&["search", "--n", "5", "--r", "4", "--out", "certs"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let rep = report(&out);
    let d = &step(&rep, "search")["detail"];
    assert_eq!(d["value"]["exact"], 6);
    assert!(dir.path().join("certs/cert-0.g6").exists());
    let out = rsat(&["search", "--n", "7", "--r", "4", "--bell-guard", "8"], dir.path());
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(step(&report(&out), "search")["detail"]["value"]["undetermined_above"], 8);
    let out = rsat(&["search", "--n", "6", "--r", "4", "--max-m", "8"], dir.path());
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn search_results_do_not_depend_on_jobs() {
    let dir = tempfile::tempdir().unwrap();
    let one = rsat(&["search", "--n", "6", "--r", "5", "--mode", "rainbow", "--jobs", "1"], dir.path());
    let four = rsat(&["search", "--n", "6", "--r", "5", "--mode", "rainbow", "--jobs", "4"], dir.path());
    assert_eq!(step(&report(&one), "search")["detail"], step(&report(&four), "search")["detail"]);
}

#[test]
fn checkpoint_then_resume() {
    let dir = tempfile::tempdir().unwrap();
    let out = rsat(&["search", "--n", "6", "--r", "4", "--checkpoint", "cp.json"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let cp: Value = serde_json::from_slice(&std::fs::read(dir.path().join("cp.json")).unwrap()).unwrap();
    assert_eq!(cp["schema"], "rsat-checkpoint/1");
    assert_eq!(cp["m"], 9);
    let resumed = rsat(&["search", "--n", "6", "--r", "4", "--resume", "cp.json"], dir.path());
    assert_eq!(resumed.status.code(), Some(0));
    assert_eq!(step(&report(&out), "search")["detail"], step(&report(&resumed), "search")["detail"]);
    let other = rsat(&["search", "--n", "6", "--r", "5", "--resume", "cp.json"], dir.path());
    assert_eq!(other.status.code(), Some(2));
}

#[test]
fn lemma_and_report_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = rsat(&["lemma", "--t", "6", "--report", "lemma.json"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let rep: Value = serde_json::from_slice(&std::fs::read(dir.path().join("lemma.json")).unwrap()).unwrap();
    assert_eq!(rep["steps"][0]["pass"], true);
}

#[test]
fn input_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("bad.g6"), "B \n").unwrap();
    for args in [
        vec!["verify", "missing.g6", "--r", "5"],
        vec!["verify", "bad.g6", "--r", "5"],
        vec!["search", "--n", "12", "--r", "4"],
        vec!["search", "--n", "6", "--r", "3"],
        vec!["construct", "--family", "omega", "--n", "14"],
        vec!["construct", "--family", "xi", "--n", "18"],
        vec!["lemma", "--t", "2"],
        vec!["frobnicate"],
    ] {
        let out = rsat(&args, dir.path());
        assert_eq!(out.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        assert!(out.stdout.is_empty(), "{args:?}");
    }
    let out = rsat(&["verify", "bad.g6", "--r", "5"], dir.path());
    assert!(String::from_utf8_lossy(&out.stderr).contains("byte 1"));
}
