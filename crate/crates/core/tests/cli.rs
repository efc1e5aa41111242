use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use sepkit::format::{parse_graph, serialize_graph};
use sepkit::gadget::ReductionMap;
use sepkit::solver::SolveReport;
use sepkit::Graph;

fn sepkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sepkit")).args(args).output().expect("binary runs")
}

fn write_graph(dir: &Path, name: &str, g: &Graph) -> String {
    let path = dir.join(name);
    fs::write(&path, serialize_graph(g)).unwrap();
    path.to_str().unwrap().to_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn solve_c6() {
    let dir = tempfile::tempdir().unwrap();
    let c6 = write_graph(dir.path(), "c6.txt", &Graph::cycle(6));
    let out = sepkit(&["solve", &c6, "--problem", "subgraph", "--alpha", "3/5"]);
    assert_eq!(out.status.code(), Some(0));
    let report: SolveReport = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(report.size, 2);
    assert_eq!(report.separator, Some(vec![0, 3]));
}

#[test]
fn solve_infeasible_and_capped() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = write_graph(dir.path(), "k4.txt", &Graph::complete(4));
    let out = sepkit(&["solve", &k4, "--problem", "vertex", "--alpha", "3/4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("\"status\":\"infeasible\""));

    let c6 = write_graph(dir.path(), "c6.txt", &Graph::cycle(6));
    let out = sepkit(&["solve", &c6, "--problem", "subgraph", "--alpha", "3/5", "--k", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_reports_reasons() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = write_graph(dir.path(), "k4.txt", &Graph::complete(4));
    let part = dir.path().join("p.txt");
    fs::write(&part, "I: 0\nV1: 1\nV2: 2 3\n").unwrap();
    let out = sepkit(&["verify", &k4, part.to_str().unwrap(), "--problem", "vertex", "--alpha", "3/4"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("sides connected"));

    let c6 = write_graph(dir.path(), "c6.txt", &Graph::cycle(6));
    fs::write(&part, "I: 0 3\nV1: 1 2\nV2: 4 5\n").unwrap();
    let out = sepkit(&["verify", &c6, part.to_str().unwrap(), "--problem", "subgraph", "--alpha", "3/5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "valid\n");
}

#[test]
fn gadget_paper_scale() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("g.dot");
    let out = sepkit(&["gadget", "--cycles", "16", "--len", "16", "--outlets", "4", "--dot", dot.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let g = parse_graph(&stdout(&out)).unwrap();
    assert_eq!(g.n(), 256);
    assert!(fs::read_to_string(dot).unwrap().starts_with("graph G {"));
}

#[test]
fn reduce_writes_graph_and_map() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = write_graph(dir.path(), "k4.txt", &Graph::complete(4));
    let map = dir.path().join("map.json");
    let out = sepkit(&[
        "reduce", &k4, "--cycles", "4", "--len", "8", "--outlets", "4", "--three-regular",
        "--map", map.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let gstar = parse_graph(&stdout(&out)).unwrap();
    assert!(gstar.is_k_regular(3));
    let map = ReductionMap::from_json(&fs::read_to_string(map).unwrap()).unwrap();
    assert_eq!(map.total_vertices(), gstar.n());
}

#[test]
fn gen_and_enum_cubic() {
    let a = sepkit(&["gen-cubic", "--n", "12", "--seed", "5"]);
    let b = sepkit(&["gen-cubic", "--n", "12", "--seed", "5"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(parse_graph(&stdout(&a)).unwrap().is_k_regular(3));

    let out = sepkit(&["enum-cubic", "--n", "6"]);
    let blocks: Vec<Graph> = stdout(&out).split("\n\n").map(|t| parse_graph(t).unwrap()).collect();
    assert_eq!(blocks.len(), 5);

    let dir = tempfile::tempdir().unwrap();
    let out = sepkit(&["enum-cubic", "--n", "8", "--out-dir", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 50);
}

#[test]
fn campaign_is_reproducible() {
    let args = ["campaign", "--sizes", "12", "--source", "random", "--seed", "7", "--count", "100"];
    let a = sepkit(&args);
    let b = sepkit(&args);
    assert_eq!(a.status.code(), Some(0), "{}", stderr(&a));
    assert_eq!(a.stdout, b.stdout);
    let last = stdout(&a).lines().last().unwrap().to_owned();
    let summary: serde_json::Value = serde_json::from_str(&last).unwrap();
    assert_eq!(summary["summary"]["forward_failures"], 0);
}

#[test]
fn export_dot_with_partition() {
    let dir = tempfile::tempdir().unwrap();
    let c6 = write_graph(dir.path(), "c6.txt", &Graph::cycle(6));
    let part = dir.path().join("p.txt");
    fs::write(&part, "I: 0 3\nV1: 1 2\nV2: 4 5\n").unwrap();
    let out = sepkit(&["export-dot", &c6, "--partition", part.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let dot = stdout(&out);
    assert_eq!(dot.matches(" -- ").count(), 6);
    assert!(dot.contains("fillcolor"));
}

#[test]
fn error_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "p 3 1\ne 0 9\n").unwrap();
    let out = sepkit(&["solve", bad.to_str().unwrap(), "--problem", "vertex", "--alpha", "3/4"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).starts_with("error[parse]: line 2"), "{}", stderr(&out));

    let out = sepkit(&["gen-cubic", "--n", "7"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(stderr(&out).starts_with("error[precondition]:"));

    let out = sepkit(&["solve", "x.txt", "--problem", "vertex", "--alpha", "1/2"]);
    assert_eq!(out.status.code(), Some(3));

    let out = sepkit(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(3));

    let big = write_graph(dir.path(), "big.txt", &Graph::cycle(70));
    let out = sepkit(&["solve", &big, "--problem", "vertex", "--alpha", "3/4"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(stderr(&out).contains("error[precondition]"));

    let out = sepkit(&["solve", "/nonexistent/graph.txt", "--problem", "vertex", "--alpha", "3/4"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(stderr(&out).starts_with("error[io]:"));
}
