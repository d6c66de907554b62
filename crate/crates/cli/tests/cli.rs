//! End-to-end tests of the `saddleq` binary: exit codes, human-readable
//! output, print/parse closure, and the JSON run report.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use saddleq::groebner::ideal_equal;
use saddleq::polyring::{parse_polynomial, MonomialOrder, Polynomial, VariableSet};
use saddleq::Rat;
use saddleq_cli::sysfile::parse_system_file;

const EXAMPLE5: &str = "resonance 1 2\nterm 1 0\nterm 0 1\nterm 2 0\nterm 1 1\nterm 0 2\n";
const REVERSIBLE: &str =
    "resonance 1 2\nterm 1 0 a=3/5 b=6/5\nterm 1 1 a=-2 b=-4\nterm 0 2 a=1/7 b=2/7\n";
const CURVE: &str = "vars t x y\nt - x\nt^2 - y\n";

fn write_temp(name: &str, text: &str) -> PathBuf {
    let path = Path::new(env!("CARGO_TARGET_TMPDIR")).join(name);
    fs::write(&path, text).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_saddleq"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).unwrap()
}

fn parse_lines(text: &str, vars: &VariableSet) -> Vec<Polynomial<Rat>> {
    text.lines()
        .map(|line| parse_polynomial(line, vars).unwrap())
        .collect()
}

#[test]
fn sibirsky_prints_reparsable_generators() {
    let file = write_temp("sib.sys", EXAMPLE5);
    let out = run(&["sibirsky", "--level", "3", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.lines().any(|l| l == "2*a21 - b21"), "{text}");
    let family = parse_system_file(EXAMPLE5).unwrap();
    let parsed = parse_lines(&text, family.param_vars());
    assert!(!parsed.is_empty());
}

#[test]
fn implicitize_agrees_with_the_binomial_generators() {
    let file = write_temp("imp.sys", EXAMPLE5);
    let out = run(&[
        "implicitize",
        "--check-against",
        "sibirsky",
        "--level",
        "3",
        file.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    let mut lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.pop(), Some("ideals equal: true"));
    assert_eq!(lines.len(), 9, "expected nine generators:\n{text}");
    let family = parse_system_file(EXAMPLE5).unwrap();
    let printed = parse_lines(&lines.join("\n"), family.param_vars());
    let recomputed = saddleq::groebner::implicitize(&family).unwrap();
    assert!(ideal_equal(&printed, &recomputed, &MonomialOrder::DegRevLex).unwrap());
}

#[test]
fn reversible_gives_verdict_exit_codes() {
    let good = write_temp("rev-good.sys", REVERSIBLE);
    let out = run(&["reversible", good.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("reversible: true"));

    let bad = write_temp("rev-bad.sys", "resonance 1 2\nterm 1 0 a=1 b=3\n");
    let out = run(&["reversible", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("reversible: false"), "{text}");
    assert!(text.contains("expected 2"), "{text}");
}

#[test]
fn membership_gives_verdict_exit_codes() {
    let file = write_temp("mem.sys", EXAMPLE5);
    let out = run(&["membership", file.to_str().unwrap(), "2*a21 - b21"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("member: true"));

    let out = run(&["membership", file.to_str().unwrap(), "a21"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("member: false"));
}

#[test]
fn input_errors_exit_with_code_two() {
    let bad = write_temp("bad.sys", "resonance 2 4\nterm 1 0\n");
    let out = run(&["quantities", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("coprime"), "{}", stderr(&out));

    let out = run(&["reversible", "/nonexistent/family.sys"]);
    assert_eq!(out.status.code(), Some(2));

    let file = write_temp("target.sys", EXAMPLE5);
    let out = run(&[
        "implicitize",
        "--check-against",
        "groebner",
        file.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("sibirsky"), "{}", stderr(&out));

    let nopolys = write_temp("empty.polys", "# nothing\n");
    let out = run(&["groebner", nopolys.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_reports_are_stable_apart_from_timing() {
    let file = write_temp("json.sys", EXAMPLE5);
    let mut reports = Vec::new();
    for name in ["run1.json", "run2.json"] {
        let json_path = Path::new(env!("CARGO_TARGET_TMPDIR")).join(name);
        let out = run(&[
            "quantities",
            "--level",
            "2",
            file.to_str().unwrap(),
            "--json",
            json_path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
        let text = fs::read_to_string(&json_path).unwrap();
        assert!(
            text.starts_with("{\n  \"command\""),
            "report must lead with the command field:\n{text}"
        );
        let mut value: serde_json::Value = serde_json::from_str(&text).unwrap();
        let object = value.as_object_mut().unwrap();
        let mut keys: Vec<&String> = object.keys().collect();
        keys.sort();
        assert_eq!(keys, ["command", "family", "millis", "result"]);
        assert!(object.remove("millis").unwrap().is_number());
        reports.push(value);
    }
    assert_eq!(reports[0], reports[1]);

    assert_eq!(reports[0]["command"], "quantities");
    assert_eq!(reports[0]["family"]["p"], 1);
    assert_eq!(reports[0]["family"]["q"], 2);
    let quantities = reports[0]["result"]["quantities"].as_array().unwrap();
    assert_eq!(quantities.len(), 2);
    let family = parse_system_file(EXAMPLE5).unwrap();
    for q in quantities {
        let text = q["text"].as_str().unwrap();
        parse_polynomial::<Rat>(text, family.param_vars()).unwrap();
    }
}

#[test]
fn groebner_output_spans_the_input_ideal() {
    let file = write_temp("curve.polys", CURVE);
    let out = run(&["groebner", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let ring = VariableSet::new(["t", "x", "y"]).unwrap();
    let basis = parse_lines(&stdout(&out), &ring);
    let inputs = parse_lines("t - x\nt^2 - y", &ring);
    assert!(ideal_equal(&basis, &inputs, &MonomialOrder::DegRevLex).unwrap());

    let out = run(&["groebner", "--order", "lex", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn integral_prints_the_table() {
    let file = write_temp("table.sys", REVERSIBLE);
    let out = run(&["integral", "--degree", "6", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.lines().any(|l| l == "v(0, 0) = 1"), "{text}");
}
