//! End-to-end checks of the command-line interface: file round-trips,
//! exit codes, and byte-stable JSON reports.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use detmor::io::{AlgebraFile, MorphismFile};
use detmor::rep::is_isomorphic;

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_detmor")
}

fn run(args: &[&str], dir: &Path) -> Output {
    Command::new(bin())
        .args(args)
        .current_dir(dir)
        .output()
        .expect("spawn detmor")
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn setup_a2(dir: &Path) {
    write(
        dir,
        "a2.json",
        r#"{"p":5,"vertices":["1","2"],"arrows":[{"name":"a","from":"1","to":"2"}],"relations":[]}"#,
    );
    write(dir, "s1.json", r#"{"dims":{"1":1},"maps":{}}"#);
    write(dir, "s2.json", r#"{"dims":{"2":1},"maps":{}}"#);
    write(dir, "p1.json", r#"{"dims":{"1":1,"2":1},"maps":{"a":[[1]]}}"#);
    write(dir, "h_empty.json", r#"{"generators":[]}"#);
    write(dir, "h_full.json", r#"{"generators":[{"1":[[1]]}]}"#);
}

#[test]
fn construct_cover_and_roundtrip() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();
    setup_a2(dir);
    let out = run(
        &[
            "construct",
            "--algebra",
            "a2.json",
            "--c",
            "s1.json",
            "--y",
            "s1.json",
            "--h",
            "h_empty.json",
            "--out",
            "alpha.json",
        ],
        dir,
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("X dims: (1:1, 2:1)"));
    assert!(stdout.contains("image matches H: yes"));
    assert!(stdout.contains("right minimal: yes"));
    // the emitted file reloads to the projective cover of S1
    let alg_file: AlgebraFile =
        serde_json::from_str(&std::fs::read_to_string(dir.join("a2.json")).unwrap()).unwrap();
    let alg = alg_file.build().unwrap();
    let morph_file: MorphismFile =
        serde_json::from_str(&std::fs::read_to_string(dir.join("alpha.json")).unwrap()).unwrap();
    let alpha = morph_file.build(&alg).unwrap();
    assert_eq!(alpha.source().dims(), &[1, 1]);
    let p1 = detmor::quiver::indec_projective(&alg, 0);
    assert!(is_isomorphic(alpha.source(), &p1).unwrap().is_some());
}

#[test]
fn construct_full_gives_identity_morphism() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();
    setup_a2(dir);
    let out = run(
        &[
            "construct",
            "--algebra",
            "a2.json",
            "--c",
            "s1.json",
            "--y",
            "s1.json",
            "--h",
            "h_full.json",
        ],
        dir,
    );
    assert!(out.status.success());
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("X dims: (1:1, 2:0)"));
}

#[test]
fn missing_file_is_exit_one() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();
    setup_a2(dir);
    let out = run(
        &[
            "construct",
            "--algebra",
            "nope.json",
            "--c",
            "s1.json",
            "--y",
            "s1.json",
            "--h",
            "h_empty.json",
        ],
        dir,
    );
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn nonprime_modulus_is_exit_two() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();
    setup_a2(dir);
    write(dir, "bad.json", r#"{"p":6,"vertices":["1"],"arrows":[]}"#);
    write(dir, "one.json", r#"{"dims":{"1":1}}"#);
    let out = run(
        &[
            "construct",
            "--algebra",
            "bad.json",
            "--c",
            "one.json",
            "--y",
            "one.json",
            "--h",
            "h_empty.json",
        ],
        dir,
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_verdicts_match_theory() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();
    setup_a2(dir);
    run(
        &[
            "construct", "--algebra", "a2.json", "--c", "s1.json", "--y", "s1.json", "--h",
            "h_empty.json", "--out", "alpha.json",
        ],
        dir,
    );
    let yes = run(
        &["check", "--algebra", "a2.json", "--morphism", "alpha.json", "--c", "s1.json"],
        dir,
    );
    assert!(String::from_utf8_lossy(&yes.stdout).contains("right determined: yes"));
    let no = run(
        &["check", "--algebra", "a2.json", "--morphism", "alpha.json", "--c", "s2.json"],
        dir,
    );
    assert!(String::from_utf8_lossy(&no.stdout).contains("right determined: no"));
}

#[test]
fn json_reports_are_byte_stable() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();
    setup_a2(dir);
    run(
        &[
            "construct", "--algebra", "a2.json", "--c", "s1.json", "--y", "s1.json", "--h",
            "h_empty.json", "--out", "alpha.json",
        ],
        dir,
    );
    let args = [
        "check",
        "--algebra",
        "a2.json",
        "--morphism",
        "alpha.json",
        "--c",
        "s2.json",
        "--json",
    ];
    let first = run(&args, dir);
    let second = run(&args, dir);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    let parsed: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(parsed["verdict"], serde_json::Value::Bool(false));
    assert!(parsed["witness"].is_object());
}

#[test]
fn mindet_of_identity_is_empty() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();
    setup_a2(dir);
    write(
        dir,
        "id.json",
        r#"{"source":{"dims":{"1":1,"2":1},"maps":{"a":[[1]]}},"target":{"dims":{"1":1,"2":1},"maps":{"a":[[1]]}},"vertexMaps":{"1":[[1]],"2":[[1]]}}"#,
    );
    let out = run(&["mindet", "--algebra", "a2.json", "--morphism", "id.json"], dir);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("zero module"));
}

#[test]
fn ar_writes_three_node_dot() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();
    setup_a2(dir);
    let out = run(
        &["ar", "--algebra", "a2.json", "--z", "s1.json", "--dot", "ar.dot"],
        dir,
    );
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("almost split sequence"));
    let dot = std::fs::read_to_string(dir.join("ar.dot")).unwrap();
    assert!(dot.starts_with("digraph"));
    for node in ["tauZ", "X ", "Z "] {
        assert!(dot.contains(node), "missing node {node} in {dot}");
    }
    // decomposable ending terms violate the precondition
    write(dir, "sum.json", r#"{"dims":{"1":1,"2":1},"maps":{"a":[[0]]}}"#);
    let err = run(&["ar", "--algebra", "a2.json", "--z", "sum.json"], dir);
    assert_eq!(err.status.code(), Some(2));
}

#[test]
fn poset_command() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();
    write(
        dir,
        "chain.json",
        r#"{"elements":["0","1","2"],"le":[["0","1"],["1","2"]]}"#,
    );
    let yes = run(
        &["poset", "--poset", "chain.json", "--x", "0", "--y", "2", "--c", "1"],
        dir,
    );
    assert!(String::from_utf8_lossy(&yes.stdout).contains("determined: yes"));
    let no = run(
        &["poset", "--poset", "chain.json", "--x", "0", "--y", "2", "--c", "2"],
        dir,
    );
    assert!(String::from_utf8_lossy(&no.stdout).contains("determined: no"));
    let class = run(
        &["poset", "--poset", "chain.json", "--x", "0", "--y", "2", "--class", "1,2"],
        dir,
    );
    assert!(String::from_utf8_lossy(&class.stdout).contains("determined: yes"));
    // incomparable endpoints are a precondition failure
    let err = run(
        &["poset", "--poset", "chain.json", "--x", "2", "--y", "0", "--c", "1"],
        dir,
    );
    assert_eq!(err.status.code(), Some(2));
}

#[test]
fn oracle_finds_refutation() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();
    setup_a2(dir);
    run(
        &[
            "construct", "--algebra", "a2.json", "--c", "s1.json", "--y", "s1.json", "--h",
            "h_empty.json", "--out", "alpha.json",
        ],
        dir,
    );
    let refuted = run(
        &[
            "oracle", "--algebra", "a2.json", "--morphism", "alpha.json", "--c", "s2.json",
            "--max-dim", "1:1,2:1",
        ],
        dir,
    );
    assert!(String::from_utf8_lossy(&refuted.stdout).contains("refuted"));
    let clean = run(
        &[
            "oracle", "--algebra", "a2.json", "--morphism", "alpha.json", "--c", "s1.json",
            "--max-dim", "1:2,2:2", "--random", "3", "--seed", "7", "--json",
        ],
        dir,
    );
    let parsed: serde_json::Value = serde_json::from_slice(&clean.stdout).unwrap();
    assert_eq!(parsed["verdict"], serde_json::Value::Bool(true));
}

#[test]
fn claim_command_reports() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();
    setup_a2(dir);
    run(
        &[
            "construct", "--algebra", "a2.json", "--c", "s1.json", "--y", "s1.json", "--h",
            "h_empty.json", "--out", "alpha.json",
        ],
        dir,
    );
    let out = run(&["claim", "--algebra", "a2.json", "--morphism", "alpha.json", "--json"], dir);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(parsed["auslanderClaimAgrees"], serde_json::Value::Bool(true));
    assert_eq!(parsed["minimalSummands"].as_array().unwrap().len(), 1);
}
