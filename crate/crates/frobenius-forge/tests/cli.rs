//! End-to-end CLI checks: exit codes, report determinism, the closure
//! cache, and line-precise parse errors.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_frobenius-forge")
}

fn fixture(name: &str) -> String {
    format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> Output {
    Command::new(bin()).args(args).output().unwrap()
}

#[test]
fn successful_runs_exit_zero() {
    for (cmd, fixture_name) in [
        ("decompose", "quadric_cone.ring"),
        ("closure", "quadric_cone.ring"),
        ("closure", "segre_p3.ring"),
        ("ematrix", "segre_p2.ring"),
        ("certify", "z2_group_p3.ring"),
        ("decompose", "z3_group_p7.ring"),
        ("discriminant", "sqrt_extension.ring"),
        ("decompose", "trivial_p3_d2.ring"),
    ] {
        let out = run(&[cmd, "--spec", &fixture(fixture_name)]);
        assert!(
            out.status.success(),
            "{cmd} on {fixture_name}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
}

#[test]
fn input_errors_exit_one() {
    // missing file
    let out = run(&["decompose", "--spec", "/nonexistent/path.ring"]);
    assert_eq!(out.status.code(), Some(1));

    // empty file
    let dir = tempdir();
    let empty = dir.join("empty.ring");
    std::fs::write(&empty, "").unwrap();
    let out = run(&["decompose", "--spec", empty.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));

    // non-coprime p and torsion order, cited with a line number
    let bad = dir.join("bad.ring");
    let text = std::fs::read_to_string(fixture("quadric_cone.ring"))
        .unwrap()
        .replace("p = 3", "p = 2");
    std::fs::write(&bad, text).unwrap();
    let out = run(&["decompose", "--spec", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line"), "stderr was: {err}");
    assert!(err.contains("torsion"), "stderr was: {err}");

    // wrong command for the spec kind
    let out = run(&["discriminant", "--spec", &fixture("quadric_cone.ring")]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn inconclusive_outcomes_exit_two() {
    // witness search that exhausts its budget
    let out = run(&[
        "witness",
        "--spec",
        &fixture("quadric_cone.ring"),
        "--c",
        "2 0",
        "--q-max",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stdout).contains("none found"));

    // zero discriminant in characteristic 2
    let out = run(&[
        "discriminant",
        "--spec",
        &fixture("sqrt_extension_char2.ring"),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stdout).contains("ZeroDiscriminant"));
}

#[test]
fn integrality_violations_exit_three() {
    // A syntactically valid group spec whose class data is inconsistent:
    // an order-2 class cannot act with eigenvalue i, and the non-integral
    // decomposition must abort with the internal-invariant code.
    let dir = tempdir();
    let path = dir.join("inconsistent.ring");
    std::fs::write(
        &path,
        "\
kind = group

[prime]
p = 3

[group]
modulus = 4
class = 1 : 0
class = 1 : 1

[table]
row = 1, 1
row = 1, -1
",
    )
    .unwrap();
    let out = run(&["decompose", "--spec", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("non-integral"), "stderr was: {err}");
}

#[test]
fn witness_found_exits_zero() {
    let out = run(&[
        "witness",
        "--spec",
        &fixture("quadric_cone.ring"),
        "--c",
        "2 0",
        "--q-max",
        "9",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("found at q = 9"));
}

#[test]
fn human_reports_are_reproducible() {
    for fixture_name in ["quadric_cone.ring", "segre_p2.ring", "z3_group_p7.ring"] {
        let mut outs = Vec::new();
        for _ in 0..2 {
            let out = run(&["certify", "--spec", &fixture(fixture_name)]);
            assert!(out.status.success());
            outs.push(frobenius_forge::report::strip_timestamp(
                &String::from_utf8_lossy(&out.stdout),
            ));
        }
        assert_eq!(outs[0], outs[1], "{fixture_name}");
    }
}

#[test]
fn machine_format_is_flat_key_value() {
    let out = run(&[
        "ematrix",
        "--spec",
        &fixture("quadric_cone.ring"),
        "--format",
        "machine",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    for line in text.lines() {
        assert!(line.contains('='), "non key-value line: {line}");
    }
    assert!(text.contains("report.command = ematrix"));
    assert!(text.contains("matrix.0."));
}

#[test]
fn closure_cache_hits_after_store() {
    let dir = tempdir();
    let cache = dir.join("cache");
    let args = [
        "closure",
        "--spec",
        &fixture("segre_p2.ring"),
        "--cache",
        cache.to_str().unwrap(),
    ];
    let first = run(&args);
    assert!(first.status.success());
    assert!(String::from_utf8_lossy(&first.stdout).contains("cache            : miss (stored)"));

    let second = run(&args);
    assert!(second.status.success());
    assert!(String::from_utf8_lossy(&second.stdout).contains("cache            : hit"));

    // apart from the cache line and timestamp, the two reports agree
    let strip = |s: &str| -> String {
        frobenius_forge::report::strip_timestamp(s)
            .lines()
            .filter(|l| !l.starts_with("cache"))
            .collect::<Vec<_>>()
            .join("\n")
    };
    assert_eq!(
        strip(&String::from_utf8_lossy(&first.stdout)),
        strip(&String::from_utf8_lossy(&second.stdout))
    );
}

#[test]
fn order_command_reports_filtration() {
    let out = run(&[
        "order",
        "--spec",
        &fixture("poly1_p2.ring"),
        "--operator",
        &fixture("frobenius_projection.op"),
    ]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("order            : 1"), "output was: {text}");
}

#[test]
fn digest_is_stable_and_input_bound() {
    let a = run(&[
        "closure",
        "--spec",
        &fixture("quadric_cone.ring"),
        "--format",
        "machine",
    ]);
    let b = run(&[
        "closure",
        "--spec",
        &fixture("segre_p2.ring"),
        "--format",
        "machine",
    ]);
    let digest_of = |out: &Output| -> String {
        String::from_utf8_lossy(&out.stdout)
            .lines()
            .find(|l| l.starts_with("report.input_digest"))
            .unwrap()
            .to_string()
    };
    assert_ne!(digest_of(&a), digest_of(&b));
    let a2 = run(&[
        "closure",
        "--spec",
        &fixture("quadric_cone.ring"),
        "--format",
        "machine",
    ]);
    assert_eq!(digest_of(&a), digest_of(&a2));
}

fn tempdir() -> PathBuf {
    let dir = std::env::temp_dir().join(format!(
        "frobenius-forge-test-{}-{}",
        std::process::id(),
        std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .unwrap()
            .as_nanos()
    ));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}
