use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn ptegkit(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_ptegkit"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn model() -> String {
    data("three_stage.toml").display().to_string()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let run = ptegkit(&full);
    (run.code, serde_json::from_str(&run.stdout).expect("envelope"))
}

fn write(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.display().to_string()
}

#[test]
fn check_reports_consistency_and_periods() {
    let run = ptegkit(&["check", &model()]);
    assert_eq!(run.code, 0);
    assert_eq!(run.stdout, "boundedly consistent: true\nperiods: [7/2, 4]\n");
}

#[test]
fn check_empty_model() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(&dir, "empty.toml", "format_version = \"1\"\n");
    let run = ptegkit(&["check", &path]);
    assert_eq!(run.code, 0);
    assert!(run.stdout.contains("periods: [0, inf)"));
}

#[test]
fn crossed_interval_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(
        &dir,
        "bad.toml",
        "format_version = \"1\"\ntransitions = [\"a\", \"b\"]\n[[places]]\nfrom = \"a\"\nto = \"b\"\nlower = \"5\"\nupper = \"3\"\n",
    );
    let run = ptegkit(&["check", &path]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("lower bound exceeds upper bound"), "{}", run.stderr);
    assert_eq!(ptegkit(&["check", "/nonexistent/model.toml"]).code, 2);
    assert_eq!(ptegkit(&["periods", &model(), "--d", "0"]).code, 2);
    assert_eq!(ptegkit(&["periods", &model(), "--mode", "fast"]).code, 2);
}

#[test]
fn periods_in_tensor_mode_agree() {
    let run = ptegkit(&["periods", &model(), "--d", "3", "--mode", "tensor"]);
    assert_eq!(run.code, 0);
    assert_eq!(run.stdout, "periods (d=3, tensor): [7/2, 4]\nagrees with d=1: yes\n");
    let run = ptegkit(&["periods", &model(), "--d", "1"]);
    assert!(run.stdout.contains("[7/2, 4]"));
}

#[test]
fn infeasible_model_prints_empty() {
    let run = ptegkit(&["periods", &data("contradictory.toml").display().to_string()]);
    assert_eq!(run.code, 0);
    assert!(run.stdout.contains(": empty"));
    let run = ptegkit(&["check", &data("contradictory.toml").display().to_string()]);
    assert!(run.stdout.contains("boundedly consistent: false"));
}

#[test]
fn trajectory_matches_example() {
    let run = ptegkit(&["trajectory", &model(), "--d", "2", "--lambda", "4", "--u", "zero"]);
    assert_eq!(run.code, 0);
    assert!(run.stdout.contains("x(0) = [0, 5/2, 6]\nx(1) = [7/2, 13/2, 10]\n"));
    assert!(run.stdout.contains("x(6) = "));
    assert!(run.stdout.contains("validation: pass"));
}

#[test]
fn trajectory_horizon_zero_prints_seed_only() {
    let run = ptegkit(&["trajectory", &model(), "--d", "2", "--lambda", "4", "--horizon", "0"]);
    assert_eq!(run.code, 0);
    assert!(run.stdout.contains("x(1) = "));
    assert!(!run.stdout.contains("x(2) = "));
}

#[test]
fn infeasible_lambda_exits_with_witness() {
    let run = ptegkit(&["trajectory", &model(), "--d", "2", "--lambda", "5"]);
    assert_eq!(run.code, 3);
    assert!(run.stdout.contains("witness: positive circuit t3 -> t3 (weight 1)"), "{}", run.stdout);
    let (code, env) = json(&["trajectory", &model(), "--lambda", "-1/2"]);
    assert_eq!(code, 3);
    assert_eq!(env["result"]["feasible"], false);
    assert_eq!(env["result"]["witness"]["weight"], "1/2");
}

#[test]
fn trajectory_with_u_file() {
    let dir = tempfile::tempdir().unwrap();
    let u = write(&dir, "u.txt", "1 0 0\n0, 0, 0\n");
    let run = ptegkit(&["trajectory", &model(), "--d", "2", "--lambda", "7/2", "--u", &u]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    assert!(run.stdout.contains("validation: pass"));
    let short = write(&dir, "short.txt", "1 2");
    assert_eq!(ptegkit(&["trajectory", &model(), "--lambda", "4", "--u", &short]).code, 2);
}

#[test]
fn validate_accepts_and_rejects() {
    let dir = tempfile::tempdir().unwrap();
    let good = write(&dir, "good.txt", "# x(0) and x(1)\n0 2.5 6\n3.5 6.5 10\n");
    let run = ptegkit(&["validate", &model(), "--d", "2", "--lambda", "4", "--seed", &good]);
    assert_eq!(run.code, 0);
    assert!(run.stdout.starts_with("valid: true"));

    let bad = write(&dir, "bad.txt", "-1 2.5 6\n3.5 6.5 10\n");
    let (code, env) = json(&["validate", &model(), "--d", "2", "--lambda", "4", "--seed", &bad]);
    assert_eq!(code, 0);
    assert_eq!(env["result"]["valid"], false);
    let violations = env["result"]["validation"]["violations"].as_array().unwrap();
    assert!(violations.iter().any(|v| v["k"] == 0 && v["i"] == "t2" && v["j"] == "t1"));

    assert_eq!(ptegkit(&["validate", &model(), "--d", "3", "--lambda", "4", "--seed", &good]).code, 2);
}

#[test]
fn dot_export() {
    let run = ptegkit(&["export-dot", &model(), "--parametric"]);
    assert_eq!(run.code, 0);
    assert!(run.stdout.starts_with("digraph G {\n"));
    assert_eq!(run.stdout.matches(" -> ").count(), 8);
    assert!(run.stdout.contains("3 -> 2 [label=\"0.5-λ\"];"));
    assert!(run.stdout.contains("3 -> 3 [label=\"max(-4+λ, -λ)\"];"));

    let run = ptegkit(&["export-dot", &model(), "--lambda", "4"]);
    assert!(run.stdout.contains("3 -> 2 [label=\"-3.5\"];"));
    assert!(!run.stdout.contains('λ'));

    let dir = tempfile::tempdir().unwrap();
    let empty = write(&dir, "empty.toml", "format_version = \"1\"\n");
    assert_eq!(ptegkit(&["export-dot", &empty, "--parametric"]).stdout, "digraph G {\n}\n");
    assert_eq!(ptegkit(&["export-dot", &model()]).code, 2);
}

#[test]
fn normalize_writes_a_model() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("flat.toml").display().to_string();
    let src = data("buffered.toml").display().to_string();
    let run = ptegkit(&["normalize", &src, "--output", &out]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    assert!(run.stdout.contains("transitions: 3 -> 5 (2 added)"));
    let flat = std::fs::read_to_string(&out).unwrap();
    assert!(!flat.contains("marking = 2"));
    // normalizing preserves the period set
    let a = ptegkit(&["check", &src]).stdout;
    let b = ptegkit(&["check", &out]).stdout;
    assert_eq!(a, b);
    let again = ptegkit(&["normalize", &out]);
    assert!(again.stdout.contains("transitions: 5 -> 5 (0 added)"));
}

#[test]
fn envelope_shape() {
    let (code, env) = json(&["check", &model()]);
    assert_eq!(code, 0);
    assert_eq!(env["command"], format!("--json check {}", model()));
    assert_eq!(env["input_digest"].as_str().unwrap().len(), 64);
    assert_eq!(env["result"]["periods"]["lo"], "7/2");
    assert_eq!(env["result"]["periods"]["hi"], "4");
    let (_, again) = json(&["check", &model()]);
    assert_eq!(env, again);
}

fn assert_exact(v: &Value, path: &str) {
    match v {
        Value::Number(n) => assert!(n.is_u64() || n.is_i64(), "float at {path}: {n}"),
        Value::String(s) => {
            let numeric = s.chars().next().is_some_and(|c| c.is_ascii_digit() || c == '-');
            if numeric && !s.contains(' ') && !s.contains('\n') {
                assert!(!s.contains('.') && !s.contains('e'), "non-rational string at {path}: {s}");
            }
        }
        Value::Array(items) => items.iter().enumerate().for_each(|(k, x)| assert_exact(x, &format!("{path}[{k}]"))),
        Value::Object(map) => map.iter().for_each(|(k, x)| assert_exact(x, &format!("{path}.{k}"))),
        _ => {}
    }
}

#[test]
fn emitted_numbers_are_exact_rationals() {
    let m = model();
    let runs: Vec<Vec<&str>> = vec![
        vec!["check", &m],
        vec!["periods", &m, "--d", "4", "--mode", "tensor"],
        vec!["trajectory", &m, "--d", "3", "--lambda", "3.75"],
        vec!["trajectory", &m, "--lambda", "5"],
        vec!["normalize", &m],
    ];
    for args in runs {
        let (_, env) = json(&args);
        assert_exact(&env["result"], "result");
        let text = ptegkit(&args).stdout;
        for token in text.split(|c: char| c.is_whitespace() || ",[]()".contains(c)) {
            let numeric = token.chars().next().is_some_and(|c| c.is_ascii_digit() || c == '-');
            if numeric && token.len() > 1 && !token.contains("..") {
                assert!(!token.contains('.'), "decimal `{token}` in output of {args:?}");
            }
        }
    }
}

#[test]
fn help_and_version() {
    let run = ptegkit(&["--help"]);
    assert_eq!(run.code, 0);
    for cmd in ["check", "periods", "trajectory", "validate", "export-dot", "normalize"] {
        assert!(run.stdout.contains(cmd));
    }
    assert_eq!(ptegkit(&["bogus"]).code, 2);
}
