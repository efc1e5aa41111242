//! Text formats: the edge-list graph format, the partition format, and DOT export.
//!
//! Graph files are ASCII with LF line endings:
//!
//! ```text
//! # optional comments
//! p <n> <m>
//! e <u> <v>      (m lines, 0-based ids)
//! ```
//!
//! Partition files hold three lines `I: <ids>`, `V1: <ids>`, `V2: <ids>`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::separator::SeparatorPartition;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn field(line_no: usize, tok: Option<&str>, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| parse_err(line_no, format!("missing {what}")))?;
    tok.parse().map_err(|_| parse_err(line_no, format!("bad {what} {tok:?}")))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut last_line = 0;
    for (no, line) in content_lines(text) {
        last_line = no;
        let mut toks = line.split_whitespace();
        match toks.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(parse_err(no, "duplicate header"));
                }
                let n = field(no, toks.next(), "vertex count")?;
                let m = field(no, toks.next(), "edge count")?;
                header = Some((n, m));
            }
            Some("e") => {
                let Some((n, _)) = header else {
                    return Err(parse_err(no, "edge line before header"));
                };
                let u = field(no, toks.next(), "endpoint")?;
                let v = field(no, toks.next(), "endpoint")?;
                if u >= n || v >= n {
                    return Err(parse_err(no, format!("endpoint out of range for n={n}")));
                }
                if u == v {
                    return Err(parse_err(no, format!("self-loop on {u}")));
                }
                edges.push((u, v));
            }
            Some(other) => return Err(parse_err(no, format!("unknown line type {other:?}"))),
            None => unreachable!("content lines are non-empty"),
        }
        if toks.next().is_some() {
            return Err(parse_err(no, "trailing fields"));
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(last_line.max(1), "missing header line"))?;
    if edges.len() != m {
        return Err(parse_err(last_line.max(1), format!("header declares {m} edges, found {}", edges.len())));
    }
    Graph::new(n, &edges)
}

pub fn serialize_graph(g: &Graph) -> String {
    let mut out = String::with_capacity(16 + 12 * g.m());
    writeln!(out, "p {} {}", g.n(), g.m()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    out
}

const SEPARATOR_COLOR: &str = "tomato";
const SIDE1_COLOR: &str = "lightblue";
const SIDE2_COLOR: &str = "palegreen";

/// Graphviz rendering; separator and side vertices get distinct fill colours.
pub fn export_dot(g: &Graph, partition: Option<&SeparatorPartition>) -> String {
    let mut out = String::from("graph G {\n");
    if partition.is_some() {
        out.push_str("  node [style=filled];\n");
    }
    for v in 0..g.n() {
        let color = partition.and_then(|p| {
            if p.separator.contains(v) {
                Some(SEPARATOR_COLOR)
            } else if p.side1.contains(v) {
                Some(SIDE1_COLOR)
            } else if p.side2.contains(v) {
                Some(SIDE2_COLOR)
            } else {
                None
            }
        });
        match color {
            Some(c) => writeln!(out, "  {v} [fillcolor={c}];").unwrap(),
            None => writeln!(out, "  {v};").unwrap(),
        }
    }
    for &(u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// Parses the three-line partition format over the universe `0..n`.
pub fn parse_partition(text: &str, n: usize) -> Result<SeparatorPartition> {
    let mut parts: [Option<VertexSet>; 3] = [None, None, None];
    let mut last_line = 0;
    for (no, line) in content_lines(text) {
        last_line = no;
        let (label, rest) =
            line.split_once(':').ok_or_else(|| parse_err(no, "expected `<label>: <ids>`"))?;
        let slot = match label.trim() {
            "I" => 0,
            "V1" => 1,
            "V2" => 2,
            other => return Err(parse_err(no, format!("unknown part {other:?}"))),
        };
        if parts[slot].is_some() {
            return Err(parse_err(no, format!("duplicate part {}", label.trim())));
        }
        let mut set = VertexSet::new(n);
        for tok in rest.split_whitespace() {
            let v: usize = tok.parse().map_err(|_| parse_err(no, format!("bad vertex id {tok:?}")))?;
            if v >= n {
                return Err(parse_err(no, format!("vertex {v} out of range for n={n}")));
            }
            set.insert(v);
        }
        parts[slot] = Some(set);
    }
    let [Some(separator), Some(side1), Some(side2)] = parts else {
        return Err(parse_err(last_line.max(1), "partition needs I, V1 and V2 lines"));
    };
    Ok(SeparatorPartition { separator, side1, side2 })
}

pub fn serialize_partition(p: &SeparatorPartition) -> String {
    let join = |s: &VertexSet| s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
    format!("I: {}\nV1: {}\nV2: {}\n", join(&p.separator), join(&p.side1), join(&p.side2))
}
