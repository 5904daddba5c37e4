//! Edge-list text format.
//!
//! ```text
//! # comment
//! n 4
//! 0 1
//! 1 2
//! ```
//!
//! The `n` directive is optional; without it the vertex count is one more than
//! the largest id. Vertex names travel as `# label <id> <name>` comment lines so
//! files stay readable by tools that only know the bare format. Reduction
//! instances carry their budget as a `# k = <budget>` comment.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{BuildWarnings, Graph, ParseMode};

#[derive(Clone, Debug)]
pub struct ParsedGraph {
    pub graph: Graph,
    pub warnings: BuildWarnings,
    /// Value of a `# k = <budget>` comment, when present.
    pub budget: Option<usize>,
}

pub fn parse_edge_list(text: &str, mode: ParseMode) -> Result<ParsedGraph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    let mut labels: Vec<(usize, String)> = Vec::new();
    let mut budget = None;
    let mut saw_edge = false;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if let Some(comment) = line.strip_prefix('#') {
            let comment = comment.trim();
            if let Some(rest) = comment.strip_prefix("label ") {
                let mut it = rest.trim().splitn(2, char::is_whitespace);
                let id = parse_id(it.next().unwrap_or(""), line_no)?;
                let name = it.next().unwrap_or("").trim().to_string();
                labels.push((id, name));
            } else if let Some(rest) = comment.strip_prefix('k') {
                if let Some(value) = rest.trim().strip_prefix('=') {
                    budget = Some(parse_id(value.trim(), line_no)?);
                }
            }
            continue;
        }
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields[0] == "n" {
            if saw_edge || n.is_some() {
                return Err(Error::Parse { line: line_no, msg: "`n` directive must come first".into() });
            }
            if fields.len() != 2 {
                return Err(Error::Parse { line: line_no, msg: "expected `n <count>`".into() });
            }
            n = Some(parse_id(fields[1], line_no)?);
            continue;
        }
        if fields.len() != 2 {
            return Err(Error::Parse { line: line_no, msg: format!("expected `u v`, got `{line}`") });
        }
        edges.push((parse_id(fields[0], line_no)?, parse_id(fields[1], line_no)?));
        saw_edge = true;
    }

    let n = n.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
    let (mut graph, warnings) = Graph::build(n, &edges, mode)?;
    if !labels.is_empty() {
        let mut names: Vec<String> = (0..n).map(|v| v.to_string()).collect();
        for (id, name) in labels {
            if id >= n {
                return Err(Error::VertexOutOfRange { vertex: id, n });
            }
            names[id] = name;
        }
        graph = graph.with_labels(names)?;
    }
    Ok(ParsedGraph { graph, warnings, budget })
}

fn parse_id(s: &str, line: usize) -> Result<usize> {
    s.parse().map_err(|_| Error::Parse { line, msg: format!("`{s}` is not a vertex id") })
}

/// Canonical serialization: `n <N>`, label comments, then sorted edges.
pub fn format_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "n {}", g.n()).unwrap();
    if let Some(labels) = g.labels() {
        for (v, name) in labels.iter().enumerate() {
            writeln!(out, "# label {v} {name}").unwrap();
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_implied_n() {
        let p = parse_edge_list("# square\n0 1\n1 2 # inline\n2 3\n3 0\n", ParseMode::Strict).unwrap();
        assert_eq!(p.graph.n(), 4);
        assert_eq!(p.graph.m(), 4);
        assert_eq!(p.budget, None);
    }

    #[test]
    fn explicit_n_allows_isolated_vertices() {
        let p = parse_edge_list("n 5\n0 1\n", ParseMode::Strict).unwrap();
        assert_eq!(p.graph.n(), 5);
    }

    #[test]
    fn budget_and_labels_survive_round_trip() {
        let text = "# k = 4\nn 3\n# label 0 u0\n# label 1 u0,1\n# label 2 u1\n0 1\n1 2\n";
        let p = parse_edge_list(text, ParseMode::Strict).unwrap();
        assert_eq!(p.budget, Some(4));
        assert_eq!(p.graph.label(1), "u0,1");
        let again = parse_edge_list(&format_edge_list(&p.graph), ParseMode::Strict).unwrap();
        assert_eq!(again.graph, p.graph);
        assert_eq!(again.graph.labels(), p.graph.labels());
    }

    #[test]
    fn rejects_malformed_lines() {
        assert!(matches!(parse_edge_list("0 1 2\n", ParseMode::Strict), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_edge_list("0 x\n", ParseMode::Strict), Err(Error::Parse { .. })));
        assert!(matches!(parse_edge_list("0 1\nn 3\n", ParseMode::Strict), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("n 2\n0 2\n", ParseMode::Strict), Err(Error::VertexOutOfRange { .. })));
        assert!(matches!(parse_edge_list("0 1\n1 0\n", ParseMode::Strict), Err(Error::DuplicateEdge(0, 1))));
        let p = parse_edge_list("0 1\n1 0\n1 1\n", ParseMode::Lenient).unwrap();
        assert_eq!(p.warnings.total(), 2);
    }

    #[test]
    fn serialization_is_sorted() {
        let g = Graph::new(4, &[(3, 2), (0, 3), (1, 0)]).unwrap();
        assert_eq!(format_edge_list(&g), "n 4\n0 1\n0 3\n2 3\n");
    }
}
