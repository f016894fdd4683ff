use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ore-hopf"))
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    Path::new(env!("CARGO_TARGET_TMPDIR")).join(name)
}

#[test]
fn build_hopf_n2_matches_golden() {
    let out = scratch("h8_cli.json");
    let o = run(&["build-hopf", "--n", "2", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/tests/data/h8.json");
    assert_eq!(std::fs::read(out).unwrap(), std::fs::read(golden).unwrap());
    assert!(stdout(&o).contains("dimension 8"));
}

#[test]
fn build_hopf_n3_passes() {
    let o = run(&["build-hopf", "--n", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["dimension"], 18);
    assert_eq!(v["pass"], true);
}

#[test]
fn build_hopf_rejects_n1_and_bad_q() {
    assert_eq!(run(&["build-hopf", "--n", "1"]).status.code(), Some(2));
    let o = run(&["build-hopf", "--n", "4", "--q-exponent", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not coprime"));
}

#[test]
fn verify_golden_and_bad_file() {
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/tests/data/h8.json");
    let o = run(&["verify", "--input", golden.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    let bad = scratch("bad_structure.json");
    std::fs::write(&bad, "{\"foo\": 1}").unwrap();
    let o = run(&["verify", "--input", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not a structure export"));
}

#[test]
fn h72_example_reports_its_failures() {
    let m = fixture("h72.json");
    let o = run(&["check-action", "--n", "6", "--matrix", m.to_str().unwrap(), "--tau", "(13)", "--b", "2,2,1"]);
    assert_eq!(o.status.code(), Some(1));
    let s = stdout(&o);
    assert!(s.contains("inner faithful (f injective): yes"), "{s}");
    assert!(s.contains("some B_st invertible: no"), "{s}");
    assert!(s.contains("m_13 = 1 but q^B_31 m_31 = -1 (B_31 = 3)"), "{s}");
    assert!(s.contains("note: invertibility of B_st is decided in Z_6"));
}

#[test]
fn quantum_plane_n4_action_passes() {
    let m = fixture("qp_n4.json");
    let o = run(&["check-action", "--n", "4", "--matrix", m.to_str().unwrap(), "--tau", "(12)", "--b", "1,0"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let s = stdout(&o);
    assert!(s.contains("inner faithful (f injective): yes"));
    assert!(s.contains("some B_st invertible: yes"));
}

#[test]
fn commutative_plane_fails_compatibility() {
    let m = fixture("qp_p1.json");
    let o = run(&[
        "--format",
        "json",
        "check-action",
        "--n",
        "2",
        "--matrix",
        m.to_str().unwrap(),
        "--tau",
        "(12)",
        "--b",
        "1,0",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["compatibility"]["pass"], false);
    let detail = v["compatibility"]["violations"][0]["detail"].as_str().unwrap();
    assert!(detail.starts_with("m_12"), "{detail}");
    // the same spec given as a plane parameter
    let o = run(&["check-action", "--n", "2", "--p", "1", "--tau", "(12)", "--b", "1,0"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn classify_verdicts() {
    let o = run(&["classify-h8-qp", "--p", "i"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verdict: InnerFaithfulActionExists"));

    let o = run(&["classify-h8-qp", "--p", "-1"]);
    let s = stdout(&o);
    assert!(s.contains("## transcript"), "{s}");
    assert!(s.contains("annihilator dimension 0"));

    let o = run(&["--format", "json", "classify-h8-qp", "--p", "1"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verdict"], "no_inner_faithful_action");
}

#[test]
fn enumerate_lists_faithful_specs() {
    let o = run(&["enumerate-actions", "--n", "2", "--p", "i"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.lines().any(|l| l.starts_with("| (12)") && l.ends_with("| yes |")), "{s}");

    let o = run(&["--format", "json", "enumerate-actions", "--n", "2", "--p", "i"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["count"].as_u64().unwrap(), v["actions"].as_array().unwrap().len() as u64);
}

#[test]
fn enumerate_refuses_large_search() {
    let o = run(&["enumerate-actions", "--n", "9", "--p", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("search space"));
}

#[test]
fn report_out_file() {
    let out = scratch("classify.json");
    let o = run(&["--format", "json", "classify-h8-qp", "--p", "zeta8", "--out", out.to_str().unwrap()]);
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert!(v["verdict"].is_string());
}
