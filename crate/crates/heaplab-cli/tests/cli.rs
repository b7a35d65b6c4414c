//! End-to-end runs of the binary against the shipped fixtures, pinning
//! the exit-code contract: 0 all-pass, 1 failed check or capacity, 2
//! input error.

use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name);
    p.to_str().unwrap().to_string()
}

fn heaplab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_heaplab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn heaplab_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_heaplab"))
        .env(key, value)
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn check_fig2_all_fails_mn1la_with_exit_1() {
    let out = heaplab(&["check", &fixture("fig2.json"), "--all"]);
    assert_eq!(out.status.code(), Some(1));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("\"property\":\"Mn1LA\""));
    assert!(stdout.contains("\"holds\":false"));
    assert!(stdout.contains("\"extreme\":\"z\""));
}

#[test]
fn check_fig2_selected_properties_pass() {
    let out = heaplab(&[
        "check",
        &fixture("fig2.json"),
        "--props",
        "EC,ND,NA,I2A,Mx1GA",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn check_fig1_all_passes_with_window_protocol() {
    let out = heaplab(&["check", &fixture("fig1.json"), "--all", "--window", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("\"windows_agree\":true"));
}

#[test]
fn check_missing_file_exits_2() {
    let out = heaplab(&["check", "no-such-file.json", "--all"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn lattice_fig2_reports_13_splits() {
    let out = heaplab(&["lattice", &fixture("fig2.json")]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("13 splits"));
}

#[test]
fn lattice_cap_exceeded_exits_1() {
    let out = heaplab(&["lattice", &fixture("fig2.json"), "--cap", "5"]);
    assert_eq!(out.status.code(), Some(1));
    let out = heaplab_env(
        &["lattice", &fixture("fig2.json")],
        "HEAPLAB_SPLIT_CAP",
        "5",
    );
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn lattice_dot_export() {
    let dir = std::env::temp_dir().join("heaplab-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let dot = dir.join("fig2.dot");
    let json = dir.join("fig2-lattice.json");
    let out = heaplab(&[
        "lattice",
        &fixture("fig2.json"),
        "--dot",
        dot.to_str().unwrap(),
        "--json-out",
        json.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let dot_text = std::fs::read_to_string(&dot).unwrap();
    assert!(dot_text.contains("label=\"a\""));
    let json_text = std::fs::read_to_string(&json).unwrap();
    assert!(json_text.contains("\"edges\""));
}

#[test]
fn rep_fig2_b_plus_holds() {
    let out = heaplab(&["rep", &fixture("fig2.json"), "--algebra", "b-plus"]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("\"minuscule_conditions\": true"));
}

#[test]
fn rep_fig2_g_prime_fails_with_defect() {
    let out = heaplab(&["rep", &fixture("fig2.json"), "--algebra", "g-prime"]);
    assert_eq!(out.status.code(), Some(1));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("\"relation\": \"XY.i\""));
    assert!(stdout.contains("\"holds\": false"));
}

#[test]
fn rep_fig1_g_prime_holds_on_interior() {
    let out = heaplab(&[
        "rep",
        &fixture("fig1.json"),
        "--algebra",
        "g-prime",
        "--ball",
        "4",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("\"success_on_interior\": true"));
    assert!(stdout.contains("interior"));
}

#[test]
fn rep_fig1_accepts_a_seed_frontier_file() {
    let dir = std::env::temp_dir().join("heaplab-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("seed.json");
    std::fs::write(
        &path,
        r#"{"frontier":{"i":1,"j":1,"k":0,"l":0,"m":0,"n":0,"o":0,"p":0,"q":0,"r":0,"s":0,"t":0}}"#,
    )
    .unwrap();
    let out = heaplab(&[
        "rep",
        &fixture("fig1.json"),
        "--algebra",
        "g-prime",
        "--ball",
        "3",
        "--seed-split",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    // A frontier violating downward closure is rejected as input error.
    std::fs::write(
        &path,
        r#"{"frontier":{"i":0,"j":0,"k":5,"l":0,"m":0,"n":0,"o":0,"p":0,"q":0,"r":0,"s":0,"t":0}}"#,
    )
    .unwrap();
    let out = heaplab(&[
        "rep",
        &fixture("fig1.json"),
        "--algebra",
        "g-prime",
        "--seed-split",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn weights_fig3_census_values() {
    let out = heaplab(&["weights", &fixture("fig3.json")]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("{\"color\":\"d\",\"mu\":0,\"psi\":1,\"upsilon\":1}"));
    assert!(stdout.contains("{\"color\":\"g\",\"mu\":-1,\"psi\":1,\"upsilon\":2}"));
    assert!(stdout.contains("{\"color\":\"a\",\"mu\":1,\"psi\":2,\"upsilon\":0}"));
}

#[test]
fn classify_fig2_and_fig1() {
    let out = heaplab(&["classify", &fixture("fig2.json")]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("\"d_complete\": true"));
    assert!(stdout.contains("\"minuscule\": false"));
    let out = heaplab(&["classify", &fixture("fig1.json")]);
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("\"minuscule\": true"));
}

#[test]
fn verify_exhaustive_small() {
    let out = heaplab(&[
        "verify",
        "--max-elements",
        "3",
        "--max-colors",
        "2",
        "--mode",
        "exhaustive",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("\"disagreements\": 0"));
}

#[test]
fn verify_single_instance() {
    let out = heaplab(&[
        "verify",
        "--max-elements",
        "1",
        "--max-colors",
        "1",
        "--mode",
        "exhaustive",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("\"instances\": 1"));
}

#[test]
fn verify_size_guard_refuses() {
    let out = heaplab(&["verify", "--max-elements", "7", "--mode", "exhaustive"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_random_reproducible() {
    let run = || {
        let out = heaplab(&[
            "verify",
            "--max-elements",
            "5",
            "--max-colors",
            "3",
            "--mode",
            "random",
            "--count",
            "50",
            "--seed",
            "7",
        ]);
        (
            out.status.code(),
            String::from_utf8_lossy(&out.stdout).to_string(),
        )
    };
    let (c1, s1) = run();
    let (c2, s2) = run();
    assert_eq!(c1, Some(0));
    assert_eq!(s1, s2);
}

#[test]
fn verify_deterministic_across_job_counts() {
    let run = |jobs: &str| {
        let out = heaplab(&[
            "verify",
            "--jobs",
            jobs,
            "--max-elements",
            "4",
            "--max-colors",
            "2",
            "--mode",
            "random",
            "--count",
            "40",
            "--seed",
            "3",
        ]);
        String::from_utf8_lossy(&out.stdout).to_string()
    };
    assert_eq!(run("1"), run("4"));
}

#[test]
fn weights_fig2_table() {
    let out = heaplab(&["weights", &fixture("fig2.json"), "--mu-prime"]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&out.stdout);
    // mu_d at the bottom split (index 0) is exactly 2.
    assert!(stdout.contains("{\"color\":\"d\",\"split\":0,\"value\":\"2\"}"));
}
