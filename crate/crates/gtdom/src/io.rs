//! The repository's canonical edge-list text format.
//!
//! Comment lines start with `#` and blank lines are ignored. The first data
//! line is `n m`; exactly `m` data lines `u v` follow with `0 <= u, v < n`,
//! `u != v`, and no duplicate edges. The writer emits edges sorted
//! lexicographically with `u < v`.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("missing 'n m' header line")]
    MissingHeader,
    #[error("line {line}: expected 'n m', found {found:?}")]
    BadHeader { line: usize, found: String },
    #[error("line {line}: expected edge 'u v', found {found:?}")]
    BadEdge { line: usize, found: String },
    #[error("expected {expected} edges, found only {found}")]
    MissingEdges { expected: usize, found: usize },
    #[error("line {line}: unexpected data after {expected} edges")]
    TrailingData { line: usize, expected: usize },
    #[error("line {line}: {source}")]
    InvalidEdge { line: usize, source: GraphError },
}

/// Parses a graph in edge-list format.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut data_lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = data_lines.next().ok_or(ParseError::MissingHeader)?;
    let mut parts = header.split_whitespace();
    let n: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| ParseError::BadHeader { line: header_line, found: header.to_string() })?;
    let m: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| ParseError::BadHeader { line: header_line, found: header.to_string() })?;
    if parts.next().is_some() {
        return Err(ParseError::BadHeader { line: header_line, found: header.to_string() });
    }

    let mut edges = Vec::with_capacity(m);
    let mut lines = Vec::with_capacity(m);
    for (line, content) in data_lines {
        if edges.len() == m {
            return Err(ParseError::TrailingData { line, expected: m });
        }
        let mut parts = content.split_whitespace();
        let parse_endpoint = |t: Option<&str>| t.and_then(|t| t.parse::<usize>().ok());
        let (u, v) = match (parse_endpoint(parts.next()), parse_endpoint(parts.next()), parts.next()) {
            (Some(u), Some(v), None) => (u, v),
            _ => return Err(ParseError::BadEdge { line, found: content.to_string() }),
        };
        edges.push((u, v));
        lines.push(line);
    }
    if edges.len() < m {
        return Err(ParseError::MissingEdges { expected: m, found: edges.len() });
    }

    Graph::from_edges(n, &edges).map_err(|source| {
        // Re-run edge insertion to find the offending line for the report.
        let mut partial = Vec::new();
        for (i, &e) in edges.iter().enumerate() {
            partial.push(e);
            if Graph::from_edges(n, &partial).is_err() {
                return ParseError::InvalidEdge { line: lines[i], source };
            }
        }
        ParseError::InvalidEdge { line: lines[lines.len() - 1], source }
    })
}

/// Serializes a graph in edge-list format.
pub fn write_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = String::new();
    out.push_str(&format!("{} {}\n", g.n(), edges.len()));
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
