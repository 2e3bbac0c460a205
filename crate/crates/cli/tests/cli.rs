//! End-to-end checks of the binary: exit codes, round trips, diagnostics,
//! and fresh-process witness re-verification.

use std::path::Path;
use std::process::{Command, Output};

fn vkmax(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vkmax"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn gen_then_kappa_prints_two() {
    let dir = tempfile::tempdir().unwrap();
    let out = vkmax(
        &["gen", "--family", "hl", "--n", "7", "--k", "2", "--r", "3", "-o", "h.hg"],
        dir.path(),
    );
    assert!(out.status.success());
    let out = vkmax(&["kappa", "h.hg"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("kappa 2"), "{}", stdout(&out));
}

#[test]
fn check_maximal_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    assert!(vkmax(
        &["gen", "--family", "hl", "--n", "7", "--k", "2", "--r", "3", "-o", "h.hg"],
        dir.path()
    )
    .status
    .success());
    let ok = vkmax(&["check-maximal", "--k", "2", "h.hg"], dir.path());
    assert_eq!(ok.status.code(), Some(0));

    // drop one edge: still admissible but no longer maximal -> exit 1
    let text = std::fs::read_to_string(dir.path().join("h.hg")).unwrap();
    let mut lines: Vec<&str> = text.lines().collect();
    let m: usize = lines[0].split_whitespace().nth(2).unwrap().parse().unwrap();
    lines.remove(1);
    let header = format!("7 3 {}", m - 1);
    let smaller = std::iter::once(header.as_str())
        .chain(lines[1..].iter().copied())
        .collect::<Vec<_>>()
        .join("\n");
    std::fs::write(dir.path().join("small.hg"), smaller + "\n").unwrap();
    let not = vkmax(&["check-maximal", "--k", "2", "small.hg"], dir.path());
    assert_eq!(not.status.code(), Some(1));
    assert!(stdout(&not).contains("NotMaximal"));
}

#[test]
fn malformed_input_exits_two_with_position() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("bad.hg"), "4 3 1\n0 1 7\n").unwrap();
    let out = vkmax(&["kappa", "bad.hg"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("bad.hg:2:5"), "{err}");
}

#[test]
fn usage_error_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let out = vkmax(&["kappa-bar", "missing.hg", "--algo", "nonsense"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    let out = vkmax(&["gen", "--family", "hl", "--n", "7"], dir.path());
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn round_trip_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    assert!(vkmax(
        &["gen", "--family", "hu", "--n", "9", "--k", "3", "--r", "3", "-o", "a.hg"],
        dir.path()
    )
    .status
    .success());
    // complement twice returns the original bytes
    assert!(vkmax(
        &["gen", "--family", "complement", "--input", "a.hg", "-o", "b.hg"],
        dir.path()
    )
    .status
    .success());
    assert!(vkmax(
        &["gen", "--family", "complement", "--input", "b.hg", "-o", "c.hg"],
        dir.path()
    )
    .status
    .success());
    let a = std::fs::read(dir.path().join("a.hg")).unwrap();
    let c = std::fs::read(dir.path().join("c.hg")).unwrap();
    assert_eq!(a, c);
}

#[test]
fn join_builds_the_lower_construction() {
    let dir = tempfile::tempdir().unwrap();
    assert!(vkmax(
        &["gen", "--family", "complete", "--n", "2", "--r", "3", "-o", "hub.hg"],
        dir.path()
    )
    .status
    .success());
    assert!(vkmax(
        &["gen", "--family", "empty", "--n", "5", "--r", "3", "-o", "rest.hg"],
        dir.path()
    )
    .status
    .success());
    assert!(vkmax(
        &["gen", "--family", "join", "--input", "hub.hg", "--input2", "rest.hg", "-o", "j.hg"],
        dir.path()
    )
    .status
    .success());
    assert!(vkmax(
        &["gen", "--family", "hl", "--n", "7", "--k", "2", "--r", "3", "-o", "hl.hg"],
        dir.path()
    )
    .status
    .success());
    let j = std::fs::read(dir.path().join("j.hg")).unwrap();
    let hl = std::fs::read(dir.path().join("hl.hg")).unwrap();
    assert_eq!(j, hl);
}

#[test]
fn saturate_and_verify() {
    let dir = tempfile::tempdir().unwrap();
    assert!(vkmax(
        &["gen", "--family", "empty", "--n", "6", "--r", "3", "-o", "e.hg"],
        dir.path()
    )
    .status
    .success());
    let out = vkmax(
        &["saturate", "--k", "2", "e.hg", "--order", "random", "--seed", "7", "-o", "sat.hg"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    let check = vkmax(&["check-maximal", "--k", "2", "sat.hg"], dir.path());
    assert_eq!(check.status.code(), Some(0));
    // saturating a complete hypergraph above its kappa-bar is inadmissible
    assert!(vkmax(
        &["gen", "--family", "complete", "--n", "6", "--r", "3", "-o", "k.hg"],
        dir.path()
    )
    .status
    .success());
    let bad = vkmax(&["saturate", "--k", "2", "k.hg"], dir.path());
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn verify_claim_exit_codes_and_formats() {
    let dir = tempfile::tempdir().unwrap();
    let out = vkmax(
        &["verify", "--claim", "thm3.2", "--n-max", "6", "--k", "2", "--r", "3"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("0 violations"));

    let out = vkmax(
        &["--format", "csv", "verify", "--claim", "cor3.3", "--n-max", "8", "--k", "2", "--k", "3", "--r", "2"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("claim,n,k,r,status,detail"));

    let out = vkmax(&["verify", "--claim", "nope"], dir.path());
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn search_writes_reverifiable_witnesses() {
    let dir = tempfile::tempdir().unwrap();
    let out = vkmax(
        &[
            "search", "--mode", "sample", "--n", "7", "--k", "2", "--r", "3",
            "--trials", "5", "--out-dir", "runs",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    let runs = std::fs::read_dir(dir.path().join("runs")).unwrap();
    let run_dir = runs.into_iter().next().unwrap().unwrap().path();
    // a fresh process re-verifies the serialized witness
    let witness = run_dir.join("min-witness.hg");
    assert!(witness.exists());
    let check = vkmax(
        &["check-maximal", "--k", "2", witness.to_str().unwrap()],
        dir.path(),
    );
    assert_eq!(check.status.code(), Some(0));
}

#[test]
fn bounds_csv_output() {
    let dir = tempfile::tempdir().unwrap();
    let out = vkmax(
        &["--format", "csv", "bounds", "--n", "8..10", "--k", "2", "--r", "2"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("n,k,r,lower,hl,hu,conj_upper,divides"));
    assert!(text.contains("9,2,2,15,15,17,35/2,false"), "{text}");
    // exact rationals only, never floats
    assert!(!text.contains("17.5"));
}

#[test]
fn seed_default_reproduces() {
    let dir = tempfile::tempdir().unwrap();
    assert!(vkmax(
        &["gen", "--family", "empty", "--n", "7", "--r", "3", "-o", "e.hg"],
        dir.path()
    )
    .status
    .success());
    let a = vkmax(&["saturate", "--k", "2", "e.hg", "--order", "random"], dir.path());
    let b = vkmax(&["saturate", "--k", "2", "e.hg", "--order", "random"], dir.path());
    assert_eq!(stdout(&a), stdout(&b));
    assert!(stdout(&a).contains("# config"));
}
