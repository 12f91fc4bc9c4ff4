use std::io::Write;
use std::process::{Command, Output, Stdio};

fn pfq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pfq")).args(args).output().unwrap()
}

fn script(name: &str, body: &str) -> String {
    let dir = std::env::temp_dir().join(format!("pfq-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn exit_codes() {
    let ok = script("ok.pfq", "field Q = Q\nisotropic diag(1, -1) over Q expect yes\n");
    assert_eq!(pfq(&["run", &ok]).status.code(), Some(0));
    let bad = script("bad.pfq", "field Q = Q\nisotropic diag(1, -1) over Q expect no\n");
    assert_eq!(pfq(&["run", &bad]).status.code(), Some(1));
    let broken = script("broken.pfq", "field Q = Q\nisotropic nope over Q\n");
    let out = pfq(&["run", &broken]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    assert_eq!(pfq(&["run", "/nonexistent/file.pfq"]).status.code(), Some(2));
    assert_eq!(pfq(&["run", &ok, "--search-max", "0"]).status.code(), Some(2));
}

#[test]
fn invariant_verb_reports_json() {
    let out = pfq(&["invariant", "--field", "reals", "1", "pf[-1, -1 | 1]", "pf[-1, -1 | 1]"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let s = v["statements"].as_array().unwrap().last().unwrap();
    assert_eq!(s["value"], "pf[-1, -1, -1 | 1]");
    assert_eq!(s["verdict"], "no");
}

#[test]
fn verify_verb() {
    let out = pfq(&["verify", "sqrt-minus-one-trivial", "--field", "laurent(gf(5), x, y)", "count=3", "--seed", "3"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn repl_reads_lines() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_pfq"))
        .arg("repl")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"field Q = Q\nhyperbolic pf[1, 3] over Q expect yes\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let line = String::from_utf8_lossy(&out.stdout);
    let v: serde_json::Value = serde_json::from_str(line.lines().last().unwrap()).unwrap();
    assert_eq!(v["verdict"], "yes");
}
