//! Edge-list text and JSON graph formats.
//!
//! Text: a header line `n m`, then `m` lines `u v` (0-based). Blank lines and
//! anything after `#` are ignored. JSON: `{"n": 4, "edges": [[0,1], ...]}`.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{Graph, Vertex};
use crate::error::GraphError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[Vertex; 2]>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson { n: g.vertex_count(), edges: g.edges().map(|(u, v)| [u, v]).collect() }
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> GraphError {
    GraphError::Parse { line, message: message.into() }
}

pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing `n m` header"))?;
    let nums = parse_pair(hline, header)?;
    let (n, m) = (nums.0, nums.1);

    let mut edges = Vec::with_capacity(m);
    for (lineno, line) in lines {
        edges.push(parse_pair(lineno, line)?);
    }
    if edges.len() != m {
        return Err(parse_err(hline, format!("header declares {m} edges, found {}", edges.len())));
    }
    Graph::new(n, &edges)
}

fn parse_pair(lineno: usize, line: &str) -> Result<(usize, usize), GraphError> {
    let mut it = line.split_whitespace();
    let mut next = || -> Result<usize, GraphError> {
        let tok = it.next().ok_or_else(|| parse_err(lineno, "expected two integers"))?;
        tok.parse().map_err(|_| parse_err(lineno, format!("not a vertex id: {tok:?}")))
    };
    let pair = (next()?, next()?);
    if it.next().is_some() {
        return Err(parse_err(lineno, "trailing tokens"));
    }
    Ok(pair)
}

pub fn parse_json_graph(text: &str) -> Result<Graph, GraphError> {
    let gj: GraphJson = serde_json::from_str(text)
        .map_err(|e| parse_err(e.line(), e.to_string()))?;
    let edges: Vec<_> = gj.edges.iter().map(|e| (e[0], e[1])).collect();
    Graph::new(gj.n, &edges)
}

/// Reads either format; JSON is detected by a leading `{`.
pub fn read_graph(path: &Path) -> Result<Graph, GraphError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| parse_err(0, format!("{}: {e}", path.display())))?;
    if text.trim_start().starts_with('{') {
        parse_json_graph(&text)
    } else {
        parse_edge_list(&text)
    }
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_with_comments() {
        let g = parse_edge_list("# square\n4 4\n0 1\n1 2 # mid\n\n2 3\n3 0\n").unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.diameter(), 2);
        let again = parse_edge_list(&write_edge_list(&g)).unwrap();
        assert_eq!(again.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
    }

    #[test]
    fn text_errors_carry_line() {
        let e = parse_edge_list("3 2\n0 1\n1 x\n").unwrap_err();
        assert!(matches!(e, GraphError::Parse { line: 3, .. }), "{e:?}");
        let e = parse_edge_list("3 3\n0 1\n1 2\n").unwrap_err();
        assert!(matches!(e, GraphError::Parse { line: 1, .. }));
        assert!(matches!(parse_edge_list("3 1\n0 1\n"), Err(GraphError::Disconnected(..))));
    }

    #[test]
    fn json_form() {
        let g = parse_json_graph(r#"{"n": 3, "edges": [[0,1],[1,2],[2,0]]}"#).unwrap();
        assert_eq!(g.edge_count(), 3);
        let json = serde_json::to_string(&GraphJson::from(&g)).unwrap();
        assert_eq!(json, r#"{"n":3,"edges":[[0,1],[0,2],[1,2]]}"#);
        assert!(parse_json_graph("{\"n\": 2}").is_err());
    }
}
