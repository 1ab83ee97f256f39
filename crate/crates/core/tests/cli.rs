use std::fs;

use clap::Parser;
use copnc::cert::Certificate;
use copnc::cli::{run, Cli, CliError};

fn call(args: &[&str]) -> (Result<(), CliError>, String) {
    let cli = Cli::try_parse_from(std::iter::once("copnc").chain(args.iter().copied())).expect("arguments parse");
    let mut buf = Vec::new();
    let r = run(cli, &mut buf);
    (r, String::from_utf8(buf).unwrap())
}

#[test]
fn construct_then_validate() {
    let dir = tempfile::tempdir().unwrap();
    for (method, graph) in
        [("matching", "petersen"), ("bipartite", "k33"), ("conformal", "prism"), ("conformal", "flower:3")]
    {
        let (r, text) = call(&["construct", "--method", method, "--graph", graph, "--seed", "7"]);
        if graph == "flower:3" {
            // a snark has no proper 3-edge-coloring
            assert_eq!(r.unwrap_err().exit_code(), 3);
            continue;
        }
        r.unwrap();
        let path = dir.path().join(format!("{method}-{graph}.json"));
        fs::write(&path, &text).unwrap();
        let (r, report) = call(&["validate", "--cert", path.to_str().unwrap(), "--graph", graph]);
        r.unwrap();
        assert!(report.contains("\"valid\": true"), "{report}");
    }
}

#[test]
fn tampered_certificate_is_rejected() {
    let (r, text) = call(&["construct", "--method", "bipartite", "--graph", "cube"]);
    r.unwrap();
    let mut c = Certificate::parse(&text).unwrap();
    let first = c.partitions[0][0].clone();
    c.partitions[1][0] = first;
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    fs::write(&path, c.to_json()).unwrap();
    let (r, _) = call(&["validate", "--cert", path.to_str().unwrap()]);
    assert_eq!(r.unwrap_err().exit_code(), 2);

    // certificate for another graph
    fs::write(&path, &text).unwrap();
    let (r, _) = call(&["validate", "--cert", path.to_str().unwrap(), "--graph", "k33"]);
    assert_eq!(r.unwrap_err().exit_code(), 2);
}

#[test]
fn family_outputs() {
    let (r, text) = call(&["family", "goldberg:5"]);
    r.unwrap();
    let report = Certificate::parse(&text).unwrap().check(None).unwrap();
    assert!(report.valid);
    assert!(report.pairs.iter().all(|p| p.agreement.is_empty()));

    let (r, text) = call(&["family", "petersen", "--emit-partitions"]);
    r.unwrap();
    // five trails per partition
    assert_eq!(text.lines().count(), 15);
    assert!(text.lines().all(|l| l.starts_with(['0', '1', '2'])));

    let (r, _) = call(&["family", "--regenerate"]);
    r.unwrap();
    // flowers need an odd parameter
    let (r, _) = call(&["family", "flower:4"]);
    assert_eq!(r.unwrap_err().exit_code(), 3);
}

#[test]
fn switch_class_report() {
    let (r, text) = call(&["switch-class", "--graph", "theta", "--moves", "conformal"]);
    r.unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["classes"], serde_json::json!([1, 1]));

    let (r, text) = call(&["switch-class", "--graph", "k4", "--moves", "odd"]);
    r.unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["classes"].as_array().unwrap().len(), 1);
    assert_eq!(v["start"]["size"], v["total"]);

    let (r, _) = call(&["switch-class", "--graph", "petersen", "--moves", "plain", "--cap", "10"]);
    assert_eq!(r.unwrap_err().exit_code(), 4);
}

#[test]
fn sweep_writes_one_record_per_graph() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.g6");
    // K4, K3,3, and a broken line
    fs::write(&input, "C~\nEFz_\n!!\n").unwrap();
    let out = dir.path().join("out.jsonl");
    let (r, _) = call(&[
        "sweep",
        "--input",
        input.to_str().unwrap(),
        "--check",
        "thm12",
        "--jobs",
        "2",
        "--out",
        out.to_str().unwrap(),
    ]);
    r.unwrap();
    let lines: Vec<serde_json::Value> =
        fs::read_to_string(&out).unwrap().lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0]["found"], false);
    assert_eq!(lines[1]["found"], true);
    assert!(lines[2]["error"].is_string());

    let (r, _) = call(&["sweep", "--input", "/nonexistent/graphs.g6", "--check", "thm5"]);
    assert_eq!(r.unwrap_err().exit_code(), 5);
}
