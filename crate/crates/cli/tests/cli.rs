use std::io::Write;
use std::process::{Command, Output};

use gbell_core::graph6;
use gbell_core::lab::catalogue::graph_catalogue;
use gbell_core::Graph;

fn gbell(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gbell"))
        .args(args)
        .env_remove("GBELL_ENGINE_LIMIT")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn field<'a>(text: &'a str, name: &str) -> &'a str {
    text.lines()
        .find_map(|l| l.strip_prefix(name).filter(|rest| rest.starts_with(' ')))
        .map(str::trim)
        .unwrap_or_else(|| panic!("no {name} in {text}"))
}

#[test]
fn compute_small_records() {
    let k3 = gbell(&["compute", "--graph6", "Bw"]);
    assert!(k3.status.success());
    let text = stdout(&k3);
    assert_eq!(field(&text, "S"), "(0, 0, 1)");
    assert_eq!(field(&text, "A"), "3");

    let text = stdout(&gbell(&["compute", "--graph6", "A_"]));
    assert_eq!((field(&text, "B"), field(&text, "T"), field(&text, "A")), ("1", "2", "2"));

    let text = stdout(&gbell(&["compute", "--family", "path-complement", "--params", "5"]));
    assert_eq!(field(&text, "A"), "15/4");
    assert_eq!(field(&text, "A_dec"), "3.750000");
    assert_eq!(field(&text, "chi"), "3");

    let text = stdout(&gbell(&["compute", "--edges", "4; 0-1,1-2,2-3,3-0"]));
    assert_eq!(field(&text, "B"), "4");
}

#[test]
fn exit_codes() {
    assert_eq!(gbell(&["compute", "--graph6", "B!"]).status.code(), Some(2));
    assert_eq!(gbell(&["compute", "--family", "cycle", "--params", "2"]).status.code(), Some(2));
    assert_eq!(gbell(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(gbell(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(gbell(&["sweep", "--max-n", "9"]).status.code(), Some(3));
    assert_eq!(gbell(&["oracle", "--max-n", "12"]).status.code(), Some(3));
    let limited = Command::new(env!("CARGO_BIN_EXE_gbell"))
        .args(["compute", "--family", "cycle", "--params", "6"])
        .env("GBELL_ENGINE_LIMIT", "5")
        .output()
        .unwrap();
    assert_eq!(limited.status.code(), Some(3));
    let bad = Command::new(env!("CARGO_BIN_EXE_gbell"))
        .args(["compute", "--graph6", "Bw"])
        .env("GBELL_ENGINE_LIMIT", "lots")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn verify_and_oracle() {
    let out = gbell(&["verify", "recurrences", "--max-n", "5"]);
    assert!(out.status.success(), "{}", stdout(&out));
    assert!(stdout(&out).contains("0 failed [pass]"));
    assert!(gbell(&["verify", "counterexamples"]).status.success());
    assert!(gbell(&["verify", "q-lemmas"]).status.success());

    let out = gbell(&["oracle", "--max-n", "5"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("52 graphs compared, 0 mismatches"));
    let out = gbell(&["oracle", "--graph6", "Bg"]);
    assert!(stdout(&out).contains("engine  (0, 1, 1)") && stdout(&out).contains("oracle  (0, 1, 1)"));
    let a = stdout(&gbell(&["oracle", "--max-n", "9", "--samples", "5", "--seed", "7"]));
    let b = stdout(&gbell(&["oracle", "--max-n", "9", "--samples", "5", "--seed", "7"]));
    assert_eq!(a, b);
}

#[test]
fn family_tables() {
    let out = gbell(&["family", "path-complement", "--to", "12"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let fib = [1u64, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233];
    for (line, f) in text.lines().skip(1).zip(fib) {
        assert_eq!(line.split_whitespace().nth(1).unwrap(), f.to_string(), "{line}");
        assert!(line.ends_with("yes"));
    }
    assert!(gbell(&["family", "cycle-complement", "--from", "4", "--to", "12"]).status.success());
    assert!(gbell(&["family", "cycle", "--from", "3", "--to", "8", "--p", "2"]).status.success());
    assert_eq!(gbell(&["family", "q", "--from", "3", "--to", "5"]).status.code(), Some(2));
}

#[test]
fn graph6_file_matches_the_internal_catalogue() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("graphs7.g6");
    let mut file = std::fs::File::create(&path).unwrap();
    // Relabel each representative by reversing the vertex order, so the file
    // does not simply echo canonical forms.
    for g in graph_catalogue(7).unwrap() {
        let n = g.order();
        let edges: Vec<_> = g.edges().map(|(u, v)| (n - 1 - u, n - 1 - v)).collect();
        writeln!(file, "{}", graph6::encode(&Graph::from_edges(n, &edges).unwrap()).unwrap()).unwrap();
    }
    drop(file);
    let from_file = dir.path().join("file.csv");
    let internal = dir.path().join("internal.csv");
    let a = gbell(&["sweep", "--input", path.to_str().unwrap(), "--out", from_file.to_str().unwrap()]);
    assert!(a.status.success(), "{}", stdout(&a));
    let full = dir.path().join("full.csv");
    assert!(gbell(&["sweep", "--max-n", "7", "--out", full.to_str().unwrap()]).status.success());
    let full = std::fs::read_to_string(full).unwrap();
    let mut lines = full.lines();
    let header = lines.next().unwrap();
    let order7: String = std::iter::once(header)
        .chain(lines.filter(|l| l.split(',').nth(1) == Some("7")))
        .map(|l| format!("{l}\n"))
        .collect();
    std::fs::write(&internal, &order7).unwrap();
    assert_eq!(std::fs::read_to_string(from_file).unwrap(), order7);
    assert!(stdout(&a).contains("graphs      1044"));
}

#[test]
fn malformed_file_reports_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.g6");
    std::fs::write(&path, "Bw\nA_\n\nBw?\n").unwrap();
    let out = gbell(&["sweep", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("line 4"));
}

#[test]
fn duplicates_and_oversized_inputs() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("mixed.g6");
    let big = graph6::encode(&Graph::empty(30)).unwrap();
    std::fs::write(&path, format!("Bw\nBg\nBW\n{big}\n")).unwrap();
    let out = gbell(&["sweep", "--input", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(field(&text, "graphs"), "2");
    assert_eq!(field(&text, "duplicates"), "1");
    assert_eq!(field(&text, "skipped"), "1");
}

#[test]
fn json_report_schema() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let out = gbell(&["sweep", "--max-n", "5", "--format", "json", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(v["graphs"], 52);
    assert_eq!(v["violations"], 0);
    assert_eq!(v["conjectures"], serde_json::json!([1, 2, 3]));
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 52);
    for row in rows {
        let a = row["A"].as_str().unwrap();
        assert!(a.contains('/'), "{a}");
        assert_eq!(row["A_dec"].as_str().unwrap().split('.').nth(1).unwrap().len(), 6);
        assert!(row["c1"].is_boolean() && row["eq3"].is_boolean());
    }
    assert!(v["summaries"].as_array().unwrap().iter().all(|s| s["confirmed"] == true));
    assert_eq!(v["confirmations"].as_array().unwrap().len(), 4);
}

#[test]
fn conjecture_selection() {
    assert!(gbell(&["sweep", "--max-n", "4", "--conjectures", "2"]).status.success());
    assert_eq!(gbell(&["sweep", "--max-n", "4", "--conjectures", "4"]).status.code(), Some(2));
}
