use std::io::Write;
use std::process::{Command, Output, Stdio};

use gsym::report::Report;

fn gsym(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_gsym"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut input = child.stdin.take().unwrap();
    input.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(input);
    child.wait_with_output().unwrap()
}

const PETERSEN: &str = "# outer cycle, spokes, inner star\n10 15\n\
    0 1\n1 2\n2 3\n3 4\n4 0\n0 5\n1 6\n2 7\n3 8\n4 9\n5 7\n7 9\n9 6\n6 8\n8 5\n";

#[test]
fn analyze_reads_stdin_and_reports_json() {
    let out = gsym(&["analyze", "-"], Some(PETERSEN));
    assert_eq!(out.status.code(), Some(0));
    let r: Report = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!((r.n, r.m, r.aut_order.as_str()), (10, 15, "120"));
    assert!(r.vertex_transitive && r.edge_transitive);
    assert_eq!(r.labels.len(), 10);
}

#[test]
fn output_is_reproducible_without_timing() {
    let a = gsym(&["analyze", "-", "--no-timing"], Some(PETERSEN));
    let b = gsym(&["analyze", "-", "--no-timing"], Some(PETERSEN));
    assert_eq!(a.stdout, b.stdout);
    assert!(!String::from_utf8_lossy(&a.stdout).contains("timing"));
}

#[test]
fn colored_labels_in_text_format() {
    let out = gsym(&["analyze", "-", "--format", "text"], Some("3 2\nx y\ny z\nc x red\n"));
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("|Aut|: 1"), "{text}");
}

#[test]
fn family_streams_one_report_per_member() {
    let out = gsym(&["family", "small_corpus:5", "--no-timing"], None);
    assert_eq!(out.status.code(), Some(0));
    let lines: Vec<Report> = String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 1 + 1 + 2 + 6 + 21);
    assert!(lines.windows(2).all(|w| w[0].n <= w[1].n));
}

#[test]
fn sampling_depends_only_on_seed() {
    let args = ["family", "small_corpus:6", "--sample", "4", "--seed", "9", "--no-timing"];
    let a = gsym(&args, None);
    let b = gsym(&args, None);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(String::from_utf8(a.stdout).unwrap().lines().count(), 4);
}

#[test]
fn exit_codes() {
    assert_eq!(gsym(&["analyze", "-"], Some("2 1\n0 0\n")).status.code(), Some(2));
    assert_eq!(gsym(&["analyze", "/nonexistent/graph.txt"], None).status.code(), Some(2));
    assert_eq!(gsym(&["family", "no_such_family:3"], None).status.code(), Some(2));
    assert_eq!(gsym(&["frobnicate"], None).status.code(), Some(2));
    let budget = gsym(&["family", "petersen", "--hadwiger-budget", "5"], None);
    assert_eq!(budget.status.code(), Some(3));
    let r: Report = serde_json::from_slice(&budget.stdout).unwrap();
    assert!(r.budget_exceeded());
}
