//! Byte-for-byte comparison of CLI pipelines against committed outputs.
//!
//! Set `LATSPEC_BLESS=1` to rewrite the expected files.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

/// Runs each stage with the previous stage's stdout as stdin; returns the
/// final stdout and exit code.
fn pipeline(stages: &[&[&str]]) -> (String, i32) {
    let mut input: Vec<u8> = Vec::new();
    let mut code = 0;
    for (i, args) in stages.iter().enumerate() {
        let mut child = Command::new(env!("CARGO_BIN_EXE_latspec"))
            .args(*args)
            .current_dir(golden_dir().join("inputs"))
            .env_remove("LATSPEC_MAX_ENUM")
            .stdin(Stdio::piped())
            .stdout(Stdio::piped())
            .stderr(Stdio::piped())
            .spawn()
            .expect("binary runs");
        child.stdin.take().unwrap().write_all(&input).unwrap();
        let out = child.wait_with_output().unwrap();
        code = out.status.code().expect("exit code");
        if i + 1 < stages.len() {
            assert_eq!(code, 0, "stage {args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
        }
        input = out.stdout;
    }
    (String::from_utf8(input).expect("UTF-8 output"), code)
}

struct Case {
    name: String,
    code: i32,
    stages: Vec<Vec<String>>,
}

fn cases() -> Vec<Case> {
    let text = fs::read_to_string(golden_dir().join("cases.txt")).unwrap();
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|line| {
            let mut words = line.split_whitespace();
            let name = words.next().unwrap().to_string();
            let code = words.next().unwrap().parse().unwrap();
            let rest: Vec<&str> = words.collect();
            let stages = rest
                .split(|w| *w == "|")
                .map(|s| s.iter().map(|w| w.to_string()).collect())
                .collect();
            Case { name, code, stages }
        })
        .collect()
}

#[test]
fn golden_pipelines() {
    let bless = std::env::var_os("LATSPEC_BLESS").is_some();
    let cases = cases();
    assert!(cases.len() >= 11);
    let mut mismatches = Vec::new();
    for case in &cases {
        let stages: Vec<Vec<&str>> = case.stages.iter().map(|s| s.iter().map(String::as_str).collect()).collect();
        let stages: Vec<&[&str]> = stages.iter().map(Vec::as_slice).collect();
        let (out, code) = pipeline(&stages);
        let path = golden_dir().join(format!("{}.out", case.name));
        if bless {
            fs::write(&path, &out).unwrap();
        }
        let expected = fs::read_to_string(&path).unwrap_or_default();
        if code != case.code || out != expected {
            mismatches.push(format!("{} (exit {code}, expected {})", case.name, case.code));
        }
    }
    assert!(mismatches.is_empty(), "golden mismatches: {mismatches:?}");
}

const GEN12: &[&str] = &["gen", "divisor", "12"];

#[test]
fn exit_codes() {
    let one = "elements: 0\nmul: 0*0=0\ntop: 0\nbottom: 0\n";
    let path = std::env::temp_dir().join(format!("latspec-one-{}.lat", std::process::id()));
    fs::write(&path, one).unwrap();
    let (_, code) = pipeline(&[&["verify", path.to_str().unwrap()]]);
    assert_eq!(code, 0, "one-element lattice verifies");
    fs::remove_file(&path).unwrap();
    assert_eq!(pipeline(&[GEN12, &["radical", "-", "nope"]]).1, 2);
    assert_eq!(pipeline(&[&["spec", "missing.lat"]]).1, 2);
    assert_eq!(pipeline(&[&["radical", "chain3.lat", "m", "--dot"]]).1, 2);
    assert_eq!(pipeline(&[&["gen", "divisor", "0"]]).1, 2);
    assert_eq!(pipeline(&[GEN12, &["decompose", "-", "4"]]).1, 1);
}

#[test]
fn output_is_deterministic() {
    let stages: &[&[&str]] = &[GEN12, &["classify", "-"]];
    assert_eq!(pipeline(stages), pipeline(stages));
}
