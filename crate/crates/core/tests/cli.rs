use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_neron-jumps"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_neron-jumps"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn catalog_file(name: &str) -> String {
    format!("{}/catalog/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn resolve_prints_key_values() {
    let o = run(&["resolve", "1", "3", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    for line in ["r=2", "L=2", "b=4,2", "mu=3,1,1,1", "chart1=0,5", "chart2=2,6"] {
        assert!(out.lines().any(|l| l == line), "missing {line} in\n{out}");
    }
    assert!(out.lines().all(|l| l.contains('=')));
}

#[test]
fn resolve_rejects_non_coprime() {
    assert_eq!(run(&["resolve", "2", "3", "4"]).status.code(), Some(2));
    assert_eq!(run(&["resolve", "x"]).status.code(), Some(2));
}

#[test]
fn trace_of_type_iv() {
    let o = run(&["trace", &catalog_file("iv.graph"), "7"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let total: Vec<&str> = out.lines().skip_while(|l| !l.starts_with("total")).skip(1).collect();
    assert_eq!(total, ["term exponent=0 coeff=1", "term exponent=5 coeff=-1"]);
}

#[test]
fn character_of_type_vi() {
    let o = run(&["--machine", "character", &catalog_file("vi.graph"), "13"]);
    assert!(stdout(&o).lines().any(|l| l == "exponents=4,10"));
}

#[test]
fn jumps_human_and_machine() {
    let o = run(&["jumps", &catalog_file("vi.graph")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("jump 1/4 (multiplicity 1)"));
    assert!(out.contains("jump 3/4 (multiplicity 1)"));

    let o = run(&["jumps", &catalog_file("ii_star.graph"), "--machine", "--samples", "5", "--nmin", "100"]);
    let out = stdout(&o);
    assert!(out.lines().any(|l| l == "jump 5/6 mult=1"));
    assert!(out.lines().any(|l| l == "denominator=6"));
    assert!(out.lines().any(|l| l.starts_with("samples=") && l.split(',').count() == 5));
}

#[test]
fn jumps_with_multiplicity() {
    let o = run(&["jumps", &catalog_file("i0-0-0_star.graph")]);
    assert!(stdout(&o).contains("jump 1/2 (multiplicity 2)"));
}

#[test]
fn graph_from_stdin_and_parse_errors() {
    let o = run_stdin(&["jumps", "-"], "vertex e genus=1 mult=1\n");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("jump 0/1"));

    let o = run_stdin(&["jumps", "-"], "vertex e genus=1 mult=1\nedge e f\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));

    assert_eq!(run(&["jumps", "/nonexistent/graph"]).status.code(), Some(2));
}

#[test]
fn verify_reports_each_root() {
    let o = run(&["verify", "3", "4", "17"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS")).count(), 16);
    assert!(out.lines().last().unwrap().contains("16/16 PASS"));
    assert_eq!(run(&["verify", "3", "4", "6"]).status.code(), Some(2));
    assert_eq!(run(&["--machine", "verify", "1", "1", "2"]).status.code(), Some(0));
}

#[test]
fn catalog_and_tables() {
    let o = run(&["catalog"]);
    assert!(stdout(&o).lines().any(|l| l.starts_with("t2:VI")));
    let o = run(&["catalog", "IV*"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS t1:IV* expected={2/3} computed={2/3}"));
    assert_eq!(run(&["catalog", "nope"]).status.code(), Some(2));

    let o = run(&["run-table", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("summary: 10/10 PASS"));
    let o = run(&["--machine", "run-table", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l.starts_with("entry=t2:VI status=PASS")));
    assert_eq!(run(&["run-table", "3"]).status.code(), Some(2));
}
