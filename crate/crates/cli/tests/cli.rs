//! End-to-end tests of the binary: subcommand behavior, exit codes,
//! deterministic output, and file round-trips.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_weakhopf"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn pairs_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../pairs")
}

fn write_pair(dir: &Path, name: &str, body: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

#[test]
fn example_builds_and_validates() {
    let out = run(&["example", "hg", "--group", "C2", "--field", "Q"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    // the counit takes the group order on the identity
    assert!(text.contains("\"counit\""));
    assert!(text.contains("overall: pass"));
}

#[test]
fn example_rejects_bad_characteristic_with_exit_two() {
    let out = run(&["example", "hg", "--group", "C2", "--field", "Fp:2"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("characteristic"));
}

#[test]
fn example_rejects_unknown_names() {
    let out = run(&["example", "frobenius", "--field", "Q"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_round_trips_emitted_files() {
    let dir = tempdir();
    let file = dir.join("hg_c2c2.json");
    let out = run(&[
        "example",
        "hg",
        "--group",
        "C2xC2",
        "--field",
        "Q",
        "--out",
        file.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let first = run(&["check", file.to_str().unwrap()]);
    assert!(first.status.success());
    let second = run(&["check", file.to_str().unwrap()]);
    assert_eq!(first.stdout, second.stdout, "byte-identical reports");
}

#[test]
fn deterministic_output_for_identical_inputs() {
    let a = run(&["example", "groupoid", "--groups", "C2,C3", "--field", "Q"]);
    let b = run(&["example", "groupoid", "--groups", "C2,C3", "--field", "Q"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn corrupted_file_fails_with_exit_one_and_witness() {
    let dir = tempdir();
    let file = dir.join("good.json");
    run(&[
        "example",
        "hg",
        "--group",
        "C2",
        "--field",
        "Q",
        "--out",
        file.to_str().unwrap(),
    ]);
    let mut v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    v["counit"][1] = serde_json::json!(9);
    let bad = dir.join("bad.json");
    std::fs::write(&bad, serde_json::to_string(&v).unwrap()).unwrap();
    let out = run(&["check", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("FAIL"));
}

#[test]
fn malformed_json_exits_two() {
    let dir = tempdir();
    let path = write_pair(&dir, "broken.json", "{ not json");
    let out = run(&["check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn matched_accepts_the_shipped_lambda_z_pair() {
    let pair = pairs_dir().join("lambda_z.json");
    let out = run(&["matched", pair.to_str().unwrap()]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("overall: pass"));
}

#[test]
fn smash_pipeline_on_the_shipped_averaged_pair() {
    let pair = pairs_dir().join("hg_c2.json");
    let out = run(&[
        "--json",
        "smash",
        pair.to_str().unwrap(),
        "--antipode",
        "--integrals",
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["facts"]["rank"], 2);
    assert_eq!(v["facts"]["smash_is_hopf"], false);
    assert_eq!(v["facts"]["smash_semisimple"], true);
    assert_eq!(v["facts"]["smash_integral_dim"], 2);
    assert_eq!(v["pass"], true);
}

#[test]
fn smash_pipeline_on_the_kaplansky_pair() {
    let pair = pairs_dir().join("kaplansky.json");
    let out = run(&["--json", "smash", pair.to_str().unwrap(), "--antipode"]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["facts"]["rank"], 4);
    assert_eq!(v["facts"]["smash_is_hopf"], true);
}

#[test]
fn integrals_subcommand_reports_dims_and_witness() {
    let dir = tempdir();
    let file = dir.join("hg_c3.json");
    run(&[
        "example",
        "hg",
        "--group",
        "C3",
        "--field",
        "Q",
        "--out",
        file.to_str().unwrap(),
    ]);
    let out = run(&["--json", "integrals", file.to_str().unwrap()]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["facts"]["left_integral_dim"], 3);
    assert_eq!(v["facts"]["semisimple"], true);
    assert!(v["facts"]["maschke_witness"].is_array());
}

#[test]
fn dual_of_dual_restores_the_file() {
    let dir = tempdir();
    let original = dir.join("orig.json");
    run(&[
        "example",
        "hg",
        "--group",
        "C2",
        "--field",
        "Q",
        "--out",
        original.to_str().unwrap(),
    ]);
    let once = dir.join("dual1.json");
    let out = run(&[
        "dual",
        original.to_str().unwrap(),
        "--out",
        once.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let twice = dir.join("dual2.json");
    let out = run(&[
        "dual",
        once.to_str().unwrap(),
        "--out",
        twice.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let a: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&original).unwrap()).unwrap();
    let mut b: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&twice).unwrap()).unwrap();
    // labels pick up dual markers; the constants must match exactly
    b.as_object_mut().unwrap().remove("labels");
    let mut a = a;
    a.as_object_mut().unwrap().remove("labels");
    assert_eq!(a, b);
}

#[test]
fn fuzz_is_seed_deterministic() {
    let a = run(&["--json", "fuzz", "--seed", "5", "--trials", "25"]);
    let b = run(&["--json", "fuzz", "--seed", "5", "--trials", "25"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["facts"]["zero_false_passes"], true);
    assert_eq!(v["facts"]["detected"], 25);
}

fn tempdir() -> PathBuf {
    let dir = std::env::temp_dir().join(format!(
        "weakhopf-cli-{}-{:?}",
        std::process::id(),
        std::thread::current().id()
    ));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn integrals_solves_a_missing_antipode() {
    let dir = tempdir();
    let file = dir.join("no_antipode.json");
    run(&[
        "example",
        "hg",
        "--group",
        "C2",
        "--field",
        "Q",
        "--out",
        file.to_str().unwrap(),
    ]);
    let mut v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    v.as_object_mut().unwrap().remove("antipode");
    std::fs::write(&file, serde_json::to_string(&v).unwrap()).unwrap();
    let out = run(&["--json", "integrals", file.to_str().unwrap()]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["facts"]["left_integral_dim"], 2);
    assert_eq!(v["facts"]["semisimple"], true);
}
