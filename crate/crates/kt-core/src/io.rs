//! Line-oriented ASCII formats for graphs (`.g`) and orientations (`.d`).
//!
//! Graph files:
//! ```text
//! c optional comment
//! p edge <n> <m>
//! e <u> <v>        (1 <= u < v <= n, exactly m lines, no duplicates)
//! ```
//! Orientation files use `p arc <n> <m>` and `a <u> <v>` meaning `u -> v`.
//! Writers emit edges sorted lexicographically by their normalized pair;
//! round trips are bit-exact.

use crate::graph::{Graph, Vertex};
use crate::orientation::Orientation;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: expected header `p {kind} <n> <m>`, got {got:?}")]
    BadHeader {
        line: usize,
        kind: &'static str,
        got: String,
    },
    #[error("line {line}: missing header before data")]
    MissingHeader { line: usize },
    #[error("line {line}: duplicate header")]
    DuplicateHeader { line: usize },
    #[error("line {line}: cannot parse {got:?}")]
    BadLine { line: usize, got: String },
    #[error("line {line}: vertex {v} out of range 1..={n}")]
    VertexOutOfRange { line: usize, v: u64, n: u32 },
    #[error("line {line}: edge endpoints must satisfy u < v")]
    NotNormalized { line: usize },
    #[error("line {line}: self-loop")]
    SelfLoop { line: usize },
    #[error("line {line}: duplicate edge")]
    DuplicateEdge { line: usize },
    #[error("declared {declared} edges, found {found}")]
    CountMismatch { declared: usize, found: usize },
}

fn parse_header(
    kind: &'static str,
    line_no: usize,
    line: &str,
) -> Result<(u32, usize), FormatError> {
    let mut it = line.split_ascii_whitespace();
    let bad = || FormatError::BadHeader {
        line: line_no,
        kind,
        got: line.to_string(),
    };
    if it.next() != Some("p") || it.next() != Some(kind) {
        return Err(bad());
    }
    let n: u32 = it.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
    let m: usize = it.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
    if it.next().is_some() {
        return Err(bad());
    }
    Ok((n, m))
}

fn parse_endpoint_line(
    tag: &str,
    line_no: usize,
    line: &str,
    n: u32,
) -> Result<(Vertex, Vertex), FormatError> {
    let mut it = line.split_ascii_whitespace();
    let bad = || FormatError::BadLine {
        line: line_no,
        got: line.to_string(),
    };
    if it.next() != Some(tag) {
        return Err(bad());
    }
    let u: u64 = it.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
    let v: u64 = it.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
    if it.next().is_some() {
        return Err(bad());
    }
    for x in [u, v] {
        if x == 0 || x > n as u64 {
            return Err(FormatError::VertexOutOfRange {
                line: line_no,
                v: x,
                n,
            });
        }
    }
    if u == v {
        return Err(FormatError::SelfLoop { line: line_no });
    }
    Ok((u as u32, v as u32))
}

/// Parses a graph file.
pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    let mut header: Option<(u32, usize)> = None;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim_end();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('p') {
            if header.is_some() {
                return Err(FormatError::DuplicateHeader { line: line_no });
            }
            header = Some(parse_header("edge", line_no, line)?);
            continue;
        }
        let Some((n, _)) = header else {
            return Err(FormatError::MissingHeader { line: line_no });
        };
        let (u, v) = parse_endpoint_line("e", line_no, line, n)?;
        if u >= v {
            return Err(FormatError::NotNormalized { line: line_no });
        }
        if !seen.insert((u, v)) {
            return Err(FormatError::DuplicateEdge { line: line_no });
        }
        edges.push((u, v));
    }
    let Some((n, m)) = header else {
        return Err(FormatError::MissingHeader {
            line: text.lines().count() + 1,
        });
    };
    if edges.len() != m {
        return Err(FormatError::CountMismatch {
            declared: m,
            found: edges.len(),
        });
    }
    Ok(Graph::from_edges(n, &edges).expect("validated above"))
}

/// Writes a graph file; edges come out sorted lexicographically.
pub fn write_graph(g: &Graph) -> String {
    write_graph_with_comments(g, &[])
}

pub fn write_graph_with_comments(g: &Graph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        out.push_str(&format!("c {c}\n"));
    }
    out.push_str(&format!("p edge {} {}\n", g.n(), g.m()));
    for &(u, v) in g.edges() {
        out.push_str(&format!("e {u} {v}\n"));
    }
    out
}

/// Parses an orientation file.
pub fn parse_orientation(text: &str) -> Result<Orientation, FormatError> {
    let mut header: Option<(u32, usize)> = None;
    let mut arcs: Vec<(Vertex, Vertex)> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim_end();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('p') {
            if header.is_some() {
                return Err(FormatError::DuplicateHeader { line: line_no });
            }
            header = Some(parse_header("arc", line_no, line)?);
            continue;
        }
        let Some((n, _)) = header else {
            return Err(FormatError::MissingHeader { line: line_no });
        };
        let (t, h) = parse_endpoint_line("a", line_no, line, n)?;
        if !seen.insert((t.min(h), t.max(h))) {
            return Err(FormatError::DuplicateEdge { line: line_no });
        }
        arcs.push((t, h));
    }
    let Some((n, m)) = header else {
        return Err(FormatError::MissingHeader {
            line: text.lines().count() + 1,
        });
    };
    if arcs.len() != m {
        return Err(FormatError::CountMismatch {
            declared: m,
            found: arcs.len(),
        });
    }
    let graph = Graph::from_edges(n, &arcs).expect("validated above");
    Ok(Orientation::from_arcs(graph, &arcs).expect("each edge oriented once"))
}

/// Writes an orientation file; arcs come out in normalized-edge order.
pub fn write_orientation(d: &Orientation) -> String {
    write_orientation_with_comments(d, &[])
}

pub fn write_orientation_with_comments(d: &Orientation, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        out.push_str(&format!("c {c}\n"));
    }
    out.push_str(&format!("p arc {} {}\n", d.n(), d.m()));
    for (t, h) in d.arcs() {
        out.push_str(&format!("a {t} {h}\n"));
    }
    out
}
