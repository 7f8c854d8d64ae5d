//! Graph file formats.
//!
//! Plain edge-list format: optional header line `p <n> <m>`, then one
//! `u v` pair per line, 0-indexed, whitespace-separated. Lines starting
//! with `#` are comments, except that `# label <i> <name>` lines carry
//! vertex labels. DIMACS-like input (`p edge <n> <m>` header, `e u v`
//! lines, 1-indexed, `c` comments) is selected by [`GraphFormat::Dimacs`].

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{build_graph, Graph, GraphError, Labels};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GraphFormat {
    #[default]
    EdgeList,
    Dimacs,
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("file contains no edges")]
    Empty,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn malformed(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Malformed {
        line,
        msg: msg.into(),
    }
}

fn parse_index(tok: &str, line: usize) -> Result<usize, ParseError> {
    tok.parse::<usize>()
        .map_err(|_| malformed(line, format!("expected a vertex index, got {tok:?}")))
}

/// Parse graph text in the given format and build a validated [`Graph`].
pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph, ParseError> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Dimacs => parse_dimacs(text),
    }
}

fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut declared_n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut label_pairs: Vec<(usize, String)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            let mut toks = rest.split_whitespace();
            if toks.next() == Some("label") {
                let i = toks
                    .next()
                    .ok_or_else(|| malformed(lineno, "label comment missing index"))?;
                let i = parse_index(i, lineno)?;
                let name = toks
                    .next()
                    .ok_or_else(|| malformed(lineno, "label comment missing name"))?;
                label_pairs.push((i, name.to_string()));
            }
            continue;
        }
        if let Some(rest) = line.strip_prefix("p ") {
            let toks: Vec<&str> = rest.split_whitespace().collect();
            if toks.len() != 2 {
                return Err(malformed(lineno, "header must be `p <n> <m>`"));
            }
            declared_n = Some(parse_index(toks[0], lineno)?);
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(malformed(lineno, format!("expected `u v`, got {line:?}")));
        }
        edges.push((parse_index(toks[0], lineno)?, parse_index(toks[1], lineno)?));
    }

    if edges.is_empty() {
        return Err(ParseError::Empty);
    }
    let max_endpoint = edges.iter().map(|&(u, v)| u.max(v)).max().unwrap_or(0);
    let n = declared_n.unwrap_or(max_endpoint + 1);
    let labels = if label_pairs.is_empty() {
        None
    } else {
        let mut labels = Labels::new(n);
        for (i, name) in label_pairs {
            if i >= n {
                return Err(ParseError::Graph(GraphError::IndexOutOfRange {
                    index: i,
                    n,
                }));
            }
            labels.set(i, name);
        }
        Some(labels)
    };
    Ok(build_graph(n, &edges, labels)?)
}

fn parse_dimacs(text: &str) -> Result<Graph, ParseError> {
    let mut declared_n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('p') {
            // p edge <n> <m>
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.len() != 4 || toks[1] != "edge" {
                return Err(malformed(lineno, "header must be `p edge <n> <m>`"));
            }
            declared_n = Some(parse_index(toks[2], lineno)?);
            continue;
        }
        if let Some(rest) = line.strip_prefix('e') {
            let toks: Vec<&str> = rest.split_whitespace().collect();
            if toks.len() != 2 {
                return Err(malformed(lineno, format!("expected `e u v`, got {line:?}")));
            }
            let u = parse_index(toks[0], lineno)?;
            let v = parse_index(toks[1], lineno)?;
            if u == 0 || v == 0 {
                return Err(malformed(lineno, "DIMACS vertices are 1-indexed"));
            }
            edges.push((u - 1, v - 1));
            continue;
        }
        return Err(malformed(lineno, format!("unrecognized line {line:?}")));
    }

    if edges.is_empty() {
        return Err(ParseError::Empty);
    }
    let max_endpoint = edges.iter().map(|&(u, v)| u.max(v)).max().unwrap_or(0);
    let n = declared_n.unwrap_or(max_endpoint + 1);
    Ok(build_graph(n, &edges, None)?)
}

/// Serialize a graph in the plain edge-list format: `p <n> <m>` header,
/// a `# label i name` block when labels exist, then the canonical edge
/// list. Output is deterministic, so round-trips are bit-exact.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "p {} {}", g.vertex_count(), g.edge_count());
    if let Some(labels) = g.labels() {
        for (i, name) in labels.iter() {
            let _ = writeln!(out, "# label {i} {name}");
        }
    }
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_plain_edge_list() {
        let g = parse_graph("p 3 3\n# a comment\n0 1\n1 2\n0 2\n", GraphFormat::EdgeList).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn header_is_optional() {
        let g = parse_graph("0 1\n1 2\n", GraphFormat::EdgeList).unwrap();
        assert_eq!(g.vertex_count(), 3);
    }

    #[test]
    fn parses_label_comments() {
        let g = parse_graph(
            "p 2 1\n# label 0 hub\n# label 1 rim\n0 1\n",
            GraphFormat::EdgeList,
        )
        .unwrap();
        assert_eq!(g.vertex_by_name("hub"), Some(0));
        assert_eq!(g.vertex_name(1), "rim");
    }

    #[test]
    fn parses_dimacs() {
        let g = parse_graph("c comment\np edge 3 2\ne 1 2\ne 2 3\n", GraphFormat::Dimacs).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_graph("0 1 2\n", GraphFormat::EdgeList).is_err());
        assert!(parse_graph("e 0 1\np edge 2 1\n", GraphFormat::Dimacs).is_err());
        assert!(parse_graph("", GraphFormat::EdgeList).is_err());
    }

    #[test]
    fn round_trip_is_bit_exact() {
        let mut labels = Labels::new(4);
        for (i, name) in ["w", "x", "y", "z"].iter().enumerate() {
            labels.set(i, *name);
        }
        let g = build_graph(4, &[(2, 0), (0, 1), (1, 2), (2, 3)], Some(labels)).unwrap();
        let text = write_edge_list(&g);
        let g2 = parse_graph(&text, GraphFormat::EdgeList).unwrap();
        assert_eq!(g.edges(), g2.edges());
        assert_eq!(text, write_edge_list(&g2));
        assert_eq!(g2.vertex_name(3), "z");
    }
}
