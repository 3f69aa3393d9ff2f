//! Text edge-list format and DOT export.
//!
//! ```text
//! # comment
//! n m
//! u v        (m lines, u < v on output)
//! w          (optional: declares an isolated vertex)
//! ```
//!
//! `n` is the live-vertex count. When the edges and declarations name fewer
//! than `n` vertices, the missing ones are the smallest unused ids, so
//! `3 0` is three isolated vertices 0, 1 and 2.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing `n m` header")]
    MissingHeader,
    #[error("expected `n m` header, found `{0}`")]
    BadHeader(String),
    #[error("invalid vertex id `{0}`")]
    BadId(String),
    #[error("expected `u v`, found `{0}`")]
    BadLine(String),
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(VertexId, VertexId),
    #[error("header declares {declared} edges, found {found}")]
    EdgeCount { declared: usize, found: usize },
    #[error("header declares {declared} vertices, found {found}")]
    VertexCount { declared: usize, found: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

fn parse_id(tok: &str, line: usize) -> Result<VertexId, ParseError> {
    tok.parse().map_err(|_| ParseError { line, kind: ParseErrorKind::BadId(tok.to_string()) })
}

/// Parses the edge-list format. Line numbers in errors are 1-based; count
/// mismatches found at end of input report the header line.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines =
        text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(ParseError { line: 0, kind: ParseErrorKind::MissingHeader })?;
    let bad_header = || ParseError { line: header_line, kind: ParseErrorKind::BadHeader(header.to_string()) };
    let nums: Vec<&str> = header.split_whitespace().collect();
    let [n, m] = nums[..] else {
        return Err(bad_header());
    };
    let n: usize = n.parse().map_err(|_| bad_header())?;
    let m: usize = m.parse().map_err(|_| bad_header())?;

    let mut g = Graph::new();
    let mut edges = 0;
    for (line, text) in lines {
        let toks: Vec<&str> = text.split_whitespace().collect();
        match toks[..] {
            [v] => {
                let v = parse_id(v, line)?;
                if !g.contains(v) {
                    g.add_vertex(v).expect("checked absent");
                }
            }
            [u, v] => {
                let (u, v) = (parse_id(u, line)?, parse_id(v, line)?);
                for w in [u, v] {
                    if !g.contains(w) {
                        g.add_vertex(w).expect("checked absent");
                    }
                }
                g.add_edge(u, v).map_err(|e| ParseError {
                    line,
                    kind: match e {
                        GraphError::SelfLoop(v) => ParseErrorKind::SelfLoop(v),
                        _ => ParseErrorKind::DuplicateEdge(u.min(v), u.max(v)),
                    },
                })?;
                edges += 1;
            }
            _ => return Err(ParseError { line, kind: ParseErrorKind::BadLine(text.to_string()) }),
        }
    }
    if edges != m {
        return Err(ParseError { line: header_line, kind: ParseErrorKind::EdgeCount { declared: m, found: edges } });
    }
    if g.vertex_count() > n {
        return Err(ParseError {
            line: header_line,
            kind: ParseErrorKind::VertexCount { declared: n, found: g.vertex_count() },
        });
    }
    let mut candidate = 0;
    while g.vertex_count() < n {
        if !g.contains(candidate) {
            g.add_vertex(candidate).expect("checked absent");
        }
        candidate += 1;
    }
    Ok(g)
}

/// Writes the edge-list format: header, edges ascending with `u < v`, then
/// isolated vertices ascending.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    for v in g.vertices().filter(|&v| g.degree(v) == Some(0)) {
        writeln!(out, "{v}").unwrap();
    }
    out
}

/// Undirected DOT with vertex ids as node names, one edge per line.
pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.vertices().filter(|&v| g.degree(v) == Some(0)) {
        writeln!(out, "  {v};").unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}
