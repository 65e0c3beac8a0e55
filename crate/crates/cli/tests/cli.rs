use std::io::Write;
use std::process::{Command, Output, Stdio};

fn hfkit(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_hfkit"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const SCRIPT: &str = "\
# numerals and brace notation
let two = {{}, {{}}}
eq two 2
rank {{{}}}
ord? {{},{{{}}}}
2 in 3
let m = tomewo {{{}}, {}}
m
canon (phi (psi 3))
nope
sub 2 3
";

#[test]
fn batch_and_repl_agree() {
    let dir = std::env::temp_dir().join(format!("hfkit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("script.hf");
    std::fs::write(&path, SCRIPT).unwrap();
    let batch = hfkit(&["run", path.to_str().unwrap()], "");
    let repl = hfkit(&["repl"], SCRIPT);
    let piped = hfkit(&["run", "-"], SCRIPT);
    assert_eq!(batch.stdout, repl.stdout);
    assert_eq!(batch.stdout, piped.stdout);
    assert_eq!(
        stdout(&batch),
        "true\n2\nfalse\ntrue\nmewo { elems: 0 1; lt: 0<1; marked: 0 1 }\n{{},{{}},{{},{{}}}}\ntrue\n"
    );
    let errors = String::from_utf8(batch.stderr).unwrap();
    assert!(errors.contains("line 10: `nope` is not bound"), "{errors}");
    assert_eq!(batch.status.code(), Some(1));
}

#[test]
fn parse_errors_name_position_and_expectations() {
    let o = hfkit(&["eval", "{,"], "");
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("1:2: expected"), "{err}");
    assert!(err.contains("`}`"), "{err}");
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn phi_rejects_sets() {
    let o = hfkit(&["eval", "phi 3"], "");
    assert!(String::from_utf8(o.stderr).unwrap().contains("use `psi` or `tomewo`"));
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn output_formats() {
    let json = hfkit(&["--format", "json", "eval", "2"], "");
    let v: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(v["nodes"], serde_json::json!([[], [0], [0, 1]]));
    let dot = hfkit(&["--format", "dot", "eval", "mewo { elems: a b; lt: a<b; marked: b }"], "");
    let text = stdout(&dot);
    assert!(text.starts_with("digraph"), "{text}");
    assert!(text.contains("filled"), "{text}");
}

#[test]
fn loaded_structures_are_bound() {
    let dir = std::env::temp_dir().join(format!("hfkit-load-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("chain.mewo");
    std::fs::write(&path, "mewo { elems: a b; lt: a<b; marked: b }\n").unwrap();
    let load = format!("m={}", path.display());
    let o = hfkit(&["--load", &load, "eval", "tov m", "m in m"], "");
    assert_eq!(stdout(&o), "{{{}}}\nfalse\n");
    assert!(o.status.success());
    let bad = hfkit(&["--load", "m", "eval", "1"], "");
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn node_limit_comes_from_the_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_hfkit"))
        .args(["eval", "rank 40"])
        .env("HFKIT_NODE_LIMIT", "8")
        .output()
        .unwrap();
    assert!(String::from_utf8(o.stderr).unwrap().contains("node limit"));
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn check_reports_and_exit_codes() {
    let o = hfkit(&["check", "--suite", "counterexamples"], "");
    assert!(o.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["suite"], "counterexamples");
    assert_eq!(report["cases"], 8);
    assert_eq!(report["failures"], serde_json::json!([]));

    let a = hfkit(&["check", "--suite", "mewos", "--seed", "42", "--max-size", "3"], "");
    let b = hfkit(&["check", "--suite", "mewos", "--seed", "42", "--max-size", "3", "--sequential"], "");
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);

    let nope = hfkit(&["check", "--suite", "nope"], "");
    assert_eq!(nope.status.code(), Some(2));
    assert!(String::from_utf8(nope.stderr).unwrap().contains("counterexamples"));
}
