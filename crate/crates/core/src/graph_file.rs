//! Line-oriented text format for dual graphs.
//!
//! ```text
//! graph IV
//! vertex a genus=0 mult=1
//! vertex c genus=0 mult=3
//! edge a c
//! ```
//!
//! `#` starts a comment, blank lines are ignored, repeated `edge` lines are
//! parallel edges.

use std::fmt::Write as _;

use crate::dual_graph::DualGraph;
use crate::error::{Error, Result};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_vertex(line: usize, args: &[&str]) -> Result<(String, u32, u64)> {
    let (id, rest) = args
        .split_first()
        .ok_or_else(|| parse_err(line, "vertex needs an id"))?;
    let mut genus = None;
    let mut mult = None;
    for tok in rest {
        let (key, value) = tok
            .split_once('=')
            .ok_or_else(|| parse_err(line, format!("expected key=value, found `{tok}`")))?;
        let bad = |_| parse_err(line, format!("`{key}` needs a non-negative integer, found `{value}`"));
        match key {
            "genus" if genus.is_none() => genus = Some(value.parse::<u32>().map_err(bad)?),
            "mult" if mult.is_none() => mult = Some(value.parse::<u64>().map_err(bad)?),
            "genus" | "mult" => return Err(parse_err(line, format!("`{key}` given twice"))),
            _ => return Err(parse_err(line, format!("unknown attribute `{key}`"))),
        }
    }
    let genus = genus.ok_or_else(|| parse_err(line, "missing genus="))?;
    let mult = mult.ok_or_else(|| parse_err(line, "missing mult="))?;
    if mult == 0 {
        return Err(parse_err(line, "multiplicity must be positive"));
    }
    Ok((id.to_string(), genus, mult))
}

/// Parses and validates a graph.
pub fn parse_graph(text: &str) -> Result<DualGraph> {
    let mut graph = DualGraph::new();
    let mut seen_header = false;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let words: Vec<&str> = content.split_whitespace().collect();
        match words[0] {
            "graph" => {
                if seen_header || !graph.vertices().is_empty() {
                    return Err(parse_err(line, "`graph` header must come first and only once"));
                }
                if words.len() < 2 {
                    return Err(parse_err(line, "graph needs a name"));
                }
                graph.set_name(words[1..].join(" "));
                seen_header = true;
            }
            "vertex" => {
                let (id, genus, mult) = parse_vertex(line, &words[1..])?;
                graph
                    .add_vertex(id, genus, mult)
                    .map_err(|e| parse_err(line, e.to_string()))?;
            }
            "edge" => {
                if words.len() != 3 {
                    return Err(parse_err(line, "edge needs exactly two vertex ids"));
                }
                graph
                    .add_edge(words[1], words[2])
                    .map_err(|e| parse_err(line, e.to_string()))?;
            }
            other => return Err(parse_err(line, format!("unknown directive `{other}`"))),
        }
    }
    graph.validated()
}

/// Serializes a graph in the format read by [`parse_graph`].
pub fn write_graph(graph: &DualGraph) -> String {
    let mut out = String::new();
    if let Some(name) = graph.name() {
        writeln!(out, "graph {name}").unwrap();
    }
    for v in graph.vertices() {
        writeln!(out, "vertex {} genus={} mult={}", v.id, v.genus, v.multiplicity).unwrap();
    }
    for e in graph.edges() {
        let (s, t) = (&graph.vertex(e.source).id, &graph.vertex(e.target).id);
        writeln!(out, "edge {s} {t}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dual_graph::fixtures::type_iv;

    const IV: &str = "\
# the cusp with a line through it, three lines through a point
graph IV
vertex v1 genus=0 mult=1
vertex v2 genus=0 mult=1
vertex v3 genus=0 mult=1

vertex v4 genus=0 mult=3
edge v1 v4
edge v2 v4   # trailing comment
edge v3 v4
";

    #[test]
    fn parses_type_iv() {
        let g = parse_graph(IV).unwrap();
        assert_eq!(g, type_iv());
        assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }

    #[test]
    fn parallel_edges() {
        let g = parse_graph("vertex a genus=0 mult=1\nvertex b genus=0 mult=1\nedge a b\nedge a b\n").unwrap();
        assert_eq!(g.edges().len(), 2);
        assert_eq!(g.genus().unwrap(), 1);
    }

    fn line_of(text: &str) -> usize {
        match parse_graph(text) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(line_of("vertex a genus=0 mult=0\n"), 1);
        assert_eq!(line_of("vertex a genus=0 mult=1\n\nedge a b\n"), 3);
        assert_eq!(line_of("vertex a genus=0\n"), 1);
        assert_eq!(line_of("vertex a genus=x mult=1\n"), 1);
        assert_eq!(line_of("vertex a genus=0 mult=1\nvertex a genus=0 mult=1\n"), 2);
        assert_eq!(line_of("# c\nnode a\n"), 2);
        assert_eq!(line_of("vertex a genus=0 mult=1\ngraph late\n"), 2);
        assert_eq!(line_of("edge a\n"), 1);
    }

    #[test]
    fn structural_errors_after_parse() {
        let text = "vertex a genus=0 mult=1\nvertex b genus=1 mult=1\n";
        assert!(matches!(parse_graph(text), Err(Error::InvalidGraph(_))));
        assert!(matches!(parse_graph(""), Err(Error::InvalidGraph(_))));
    }
}
