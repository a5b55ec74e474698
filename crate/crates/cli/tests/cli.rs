use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superext")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn analyze_q8() {
    let o = run(&["analyze", "Q8"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("L           2 x C2^3 x Q8"), "{s}");
    assert!(s.contains("|E|         2"), "{s}");
}

#[test]
fn analyze_c4_brute_agrees() {
    let o = run(&["analyze", "C4", "--brute", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["provenance"], "both+agree");
    assert_eq!(v["min_left_ideal"], "C2 x C4");
}

#[test]
fn analyze_c3_is_trivial() {
    let o = run(&["analyze", "C3", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["min_left_ideal"], "2^0");
    assert_eq!(v["idempotents"], 1);
}

#[test]
fn analyze_json_round_trips() {
    let o = run(&["analyze", "D8", "--json"]);
    let r = superext::structure::StructureReport::from_json(&stdout(&o)).unwrap();
    assert_eq!(r.min_left_ideal.to_string(), "2^2 x C2^5");
    assert_eq!(
        serde_json::from_str::<serde_json::Value>(&r.to_json().unwrap()).unwrap(),
        serde_json::from_slice::<serde_json::Value>(&o.stdout).unwrap()
    );
}

#[test]
fn certify_a4() {
    let o = run(&["analyze", "A4", "--certify", "--seed", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("L           2^2 x C2"), "{s}");
    assert!(s.contains("8 elements"), "{s}");
}

#[test]
fn table_is_deterministic_and_annotated() {
    let a = run(&["table"]);
    let b = run(&["table"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let s = stdout(&a);
    let row = |x: &str| s.lines().find(|l| l.split_whitespace().next() == Some(x)).unwrap().to_string();
    assert!(row("C8").split_whitespace().nth(1) == Some("2"), "{s}");
    assert!(row("A4").contains("2^6 x C2^3"), "{s}");
    assert!(s.lines().any(|l| l.starts_with("D8: published-table discrepancy")), "{s}");
    let j = run(&["table", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&j.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 9);
}

#[test]
fn mls_counts() {
    for (spec, n) in [("C1", "1"), ("C4", "12"), ("C5", "81")] {
        let o = run(&["mls-count", spec]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o).trim(), n);
    }
}

#[test]
fn mls_stream_file() {
    let dir = std::env::temp_dir().join(format!("superext-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("c4.txt");
    let o = run(&["mls-count", "C4", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n=4 pairs=8");
    assert_eq!(lines.len(), 13);
    for l in &lines[1..] {
        superext::MlsSignature::from_hex(4, l).unwrap();
    }
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_codes() {
    let o = run(&["mls-count", "C6", "--budget", "10"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("partial"));
    let o = run(&["analyze", "C6", "--brute", "--budget", "10"]);
    assert_eq!(o.status.code(), Some(3));
    let o = run(&["analyze", "Z7"]);
    assert_eq!(o.status.code(), Some(4));
    let o = run(&["analyze", "C32"]);
    assert_eq!(o.status.code(), Some(4));
}
