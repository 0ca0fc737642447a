//! The DIMACS edge format:
//!
//! ```text
//! c optional comments
//! p edge <n> <m>
//! e <u> <v>
//! ```
//!
//! Endpoints are 1-indexed in the file and 0-indexed in the returned graph.

use std::fmt;

use hpart::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-indexed line, 0 when the problem is the file as a whole.
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "{}", self.message)
        } else {
            write!(f, "line {}: {}", self.line, self.message)
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone)]
pub struct ParsedGraph {
    pub graph: Graph,
    /// Non-fatal problems, such as an edge count that disagrees with the
    /// `p` line.
    pub warnings: Vec<String>,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

pub fn parse_graph(text: &str) -> Result<ParsedGraph, ParseError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let mut fields = raw.split_whitespace();
        let Some(tag) = fields.next() else {
            continue;
        };
        match tag {
            "c" => {}
            "p" => {
                if header.is_some() {
                    return Err(err(line, "duplicate `p` line"));
                }
                let rest: Vec<&str> = fields.collect();
                let [format, n, m] = rest[..] else {
                    return Err(err(line, "expected `p edge <n> <m>`"));
                };
                if format != "edge" && format != "col" {
                    return Err(err(line, format!("unsupported format `{format}`")));
                }
                let n = n
                    .parse()
                    .map_err(|_| err(line, format!("bad vertex count `{n}`")))?;
                let m = m
                    .parse()
                    .map_err(|_| err(line, format!("bad edge count `{m}`")))?;
                header = Some((n, m, line));
            }
            "e" => {
                let Some((n, _, _)) = header else {
                    return Err(err(line, "edge before the `p` line"));
                };
                let rest: Vec<&str> = fields.collect();
                let [u, v] = rest[..] else {
                    return Err(err(line, "expected `e <u> <v>`"));
                };
                let endpoint = |s: &str| -> Result<usize, ParseError> {
                    match s.parse::<usize>() {
                        Ok(x) if (1..=n).contains(&x) => Ok(x - 1),
                        _ => Err(err(line, format!("endpoint `{s}` is outside 1..={n}"))),
                    }
                };
                let (u, v) = (endpoint(u)?, endpoint(v)?);
                if u == v {
                    return Err(err(line, format!("self-loop at vertex {}", u + 1)));
                }
                edges.push((u, v));
            }
            other => return Err(err(line, format!("unknown line type `{other}`"))),
        }
    }
    let Some((n, m, p_line)) = header else {
        return Err(err(0, "missing `p edge <n> <m>` line"));
    };
    let graph = Graph::from_edge_list(n, &edges).map_err(|e| err(0, e.to_string()))?;
    let mut warnings = Vec::new();
    if graph.edge_count() != m {
        warnings.push(format!(
            "line {p_line}: header declares {m} edges, found {} distinct edges",
            graph.edge_count()
        ));
    }
    Ok(ParsedGraph { graph, warnings })
}

/// Inverse of [`parse_graph`] up to comments and edge order.
pub fn write_graph(graph: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", graph.n(), graph.edge_count());
    for &(u, v) in graph.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let parsed = parse_graph("p edge 3 3\ne 1 2\ne 2 3\ne 3 1").unwrap();
        assert_eq!(parsed.graph, Graph::complete(3));
        assert!(parsed.warnings.is_empty());
    }

    #[test]
    fn comments_are_skipped() {
        let parsed = parse_graph("c hi\np edge 2 1\ne 1 2").unwrap();
        assert_eq!(parsed.graph, Graph::complete(2));
    }

    #[test]
    fn self_loop_is_rejected_with_line() {
        let e = parse_graph("p edge 2 1\ne 1 1").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.message.contains("self-loop"));
    }

    #[test]
    fn other_errors() {
        assert_eq!(parse_graph("e 1 2").unwrap_err().line, 1);
        assert_eq!(parse_graph("c nothing").unwrap_err().line, 0);
        assert_eq!(parse_graph("p edge 2 1\ne 1 3").unwrap_err().line, 2);
        assert_eq!(parse_graph("p edge 2 1\ne 0 1").unwrap_err().line, 2);
        assert_eq!(parse_graph("p edge 2 1\np edge 2 1").unwrap_err().line, 2);
        assert_eq!(parse_graph("p edge 2 1\nx 1 2").unwrap_err().line, 2);
        assert_eq!(parse_graph("p edge two 1").unwrap_err().line, 1);
    }

    #[test]
    fn duplicates_and_count_mismatch_warn() {
        let parsed = parse_graph("p edge 3 4\ne 1 2\ne 2 1\ne 2 3\n").unwrap();
        assert_eq!(parsed.graph.edge_count(), 2);
        assert_eq!(parsed.warnings.len(), 1);
    }

    #[test]
    fn round_trips() {
        for g in [Graph::petersen(), Graph::empty(4), Graph::cycle(7)] {
            assert_eq!(parse_graph(&write_graph(&g)).unwrap().graph, g);
        }
    }
}
