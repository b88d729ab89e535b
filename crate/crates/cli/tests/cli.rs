use std::io::Write;
use std::process::{Command, Output, Stdio};

use freecr_cli::parse_frame;
use serde_json::Value;

fn freecr(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_freecr"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn model(args: &[&str]) -> String {
    let mut full = vec!["model", "flat"];
    full.extend_from_slice(args);
    let out = freecr(&full, None);
    assert_eq!(out.status.code(), Some(0));
    String::from_utf8(out.stdout).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

const DEGENERATE: &str = "format: 1
n: 2
field X1:
  z1 = 1
field X2:
  z1 = 1
";

#[test]
fn model_output_round_trips() {
    for args in [&["--n", "2"][..], &["--n", "3"], &["--n", "4", "--deform"]] {
        let text = model(args);
        assert_eq!(parse_frame(&text).unwrap().to_text(), text);
    }
}

#[test]
fn check_accepts_the_flat_model() {
    let out = freecr(
        &["--format", "json", "check", "-"],
        Some(&model(&["--n", "2"])),
    );
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["passed"], true);
    assert_eq!(v["checks"]["integrable"], true);
}

#[test]
fn deformed_model_is_not_flat_and_exits_zero() {
    let out = freecr(
        &["--format", "json", "invariant", "-"],
        Some(&model(&["--n", "4", "--deform"])),
    );
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["verdict"], "not_flat");
    let p = v["p"].as_array().unwrap();
    assert!(!p.is_empty());
    for e in p {
        assert_eq!(e["value"], "-1");
    }
}

#[test]
fn degenerate_frame_is_rejected_with_status_one() {
    for cmd in ["check", "invariant"] {
        let out = freecr(&["--format", "json", cmd, "-"], Some(DEGENERATE));
        assert_eq!(out.status.code(), Some(1), "{cmd}");
        let v = json(&out);
        assert_eq!(v["rejected_by"], "nondegenerate");
    }
    let out = freecr(&["--format", "json", "invariant", "-"], Some(DEGENERATE));
    assert_eq!(json(&out)["verdict"], "rejected");
}

#[test]
fn input_errors_exit_two() {
    let bad = "format: 1\nn: 2\nfield X1:\n  z1 = z1^^2\nfield X2:\n  z2 = 1\n";
    let out = freecr(&["check", "-"], Some(bad));
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 4"), "{err}");

    let out = freecr(&["check", "/nonexistent/frame.txt"], None);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(
        freecr(&["model", "flat", "--n", "3", "--deform"], None)
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        freecr(&["algebra", "verify", "--n", "1"], None)
            .status
            .code(),
        Some(2)
    );
    assert_eq!(freecr(&["frobnicate"], None).status.code(), Some(2));
}

#[test]
fn algebra_and_fefferman_suites_pass() {
    for cmd in ["algebra", "fefferman"] {
        let out = freecr(&["--format", "json", cmd, "verify", "--n", "2"], None);
        assert_eq!(out.status.code(), Some(0), "{cmd}");
        assert_eq!(json(&out)["passed"], true);
    }
}

#[test]
fn outputs_are_deterministic() {
    let input = model(&["--n", "4", "--deform"]);
    for format in ["text", "json"] {
        let a = freecr(&["--format", format, "invariant", "-"], Some(&input));
        let b = freecr(&["--format", format, "invariant", "-"], Some(&input));
        assert_eq!(a.stdout, b.stdout, "{format}");
    }
}
