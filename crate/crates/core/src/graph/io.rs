//! Plain-text edge-list format.
//!
//! ```text
//! # comment
//! n m
//! u v        (m lines, 0-based)
//! label i name
//! ```
//!
//! The writer emits edges as `u v` with `u < v` in lexicographic order,
//! followed by labels in index order, so `write_graph(parse_graph(s))`
//! reproduces any normalized input byte for byte.

use std::fmt::Write as _;

use thiserror::Error;

use super::{Graph, GraphError, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing header line `n m`")]
    MissingHeader,
    #[error("expected {expected} edge lines, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

fn parse_index(token: Option<&str>, line: usize, what: &str) -> Result<usize, ParseError> {
    let token = token.ok_or_else(|| syntax(line, format!("missing {what}")))?;
    token
        .parse()
        .map_err(|_| syntax(line, format!("invalid {what} {token:?}")))
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let mut fields = header.split_whitespace();
    let n = parse_index(fields.next(), header_line, "vertex count")?;
    let m = parse_index(fields.next(), header_line, "edge count")?;
    if fields.next().is_some() {
        return Err(syntax(header_line, "trailing tokens in header"));
    }

    let mut edges = Vec::with_capacity(m);
    let mut labels: Vec<(Vertex, String)> = Vec::new();
    for (line, content) in lines {
        if let Some(rest) = content.strip_prefix("label") {
            if !rest.starts_with(char::is_whitespace) {
                return Err(syntax(line, "malformed label line"));
            }
            let rest = rest.trim_start();
            let (index, name) = rest
                .split_once(char::is_whitespace)
                .ok_or_else(|| syntax(line, "label line needs an index and a name"))?;
            let v = parse_index(Some(index), line, "label index")?;
            labels.push((v, name.trim().to_string()));
            continue;
        }
        if !labels.is_empty() {
            return Err(syntax(line, "edge line after label section"));
        }
        let mut fields = content.split_whitespace();
        let u = parse_index(fields.next(), line, "edge endpoint")?;
        let v = parse_index(fields.next(), line, "edge endpoint")?;
        if fields.next().is_some() {
            return Err(syntax(line, "trailing tokens after edge"));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(ParseError::EdgeCount {
            expected: m,
            found: edges.len(),
        });
    }
    let mut graph = Graph::from_edge_list(n, &edges, None)?;
    for (v, name) in &labels {
        graph.set_label(*v, name)?;
    }
    Ok(graph)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    for (v, name) in g.labels() {
        let _ = writeln!(out, "label {v} {name}");
    }
    out
}
