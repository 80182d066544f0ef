//! Text formats.
//!
//! Graph files: `#` comment lines, a header `n m`, then exactly `m` edge lines
//! `u v`, `u v c` or `u v d` with 0-based endpoints. An untyped edge is a
//! d-edge. Packing files: whitespace separated vertex indices, `#` starts a
//! comment that runs to the end of the line.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::{EdgeKind, Graph, TypedMultigraph};

/// Result of parsing a graph file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParsedGraph {
    /// No edge line carried an explicit type.
    Simple(Graph),
    /// At least one edge line carried an explicit `c` or `d`.
    Typed(TypedMultigraph),
}

impl ParsedGraph {
    pub fn vertex_count(&self) -> usize {
        match self {
            ParsedGraph::Simple(g) => g.vertex_count(),
            ParsedGraph::Typed(tm) => tm.vertex_count(),
        }
    }

    pub fn into_typed(self) -> TypedMultigraph {
        match self {
            ParsedGraph::Simple(g) => TypedMultigraph::from_graph(&g),
            ParsedGraph::Typed(tm) => tm,
        }
    }

    /// The plain graph; typed input is accepted only when it has no c-edges.
    pub fn into_simple(self) -> Result<Graph> {
        match self {
            ParsedGraph::Simple(g) => Ok(g),
            ParsedGraph::Typed(tm) => tm.as_plain_graph().ok_or_else(|| {
                Error::InvalidInput("graph has c-edges; a plain graph is required".into())
            }),
        }
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_index(tok: &str, line: usize, what: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::parse(line, format!("invalid {what} `{tok}`")))
}

pub fn parse_graph(text: &str) -> Result<ParsedGraph> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing `n m` header"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::parse(hline, "header must be `n m`"));
    }
    let n = parse_index(fields[0], hline, "vertex count")?;
    let m = parse_index(fields[1], hline, "edge count")?;

    let mut edges = Vec::with_capacity(m);
    let mut typed = false;
    let mut last_line = hline;
    for (line, body) in lines {
        last_line = line;
        if edges.len() == m {
            return Err(Error::parse(line, format!("more than {m} edge lines")));
        }
        let toks: Vec<&str> = body.split_whitespace().collect();
        let kind = match toks.as_slice() {
            [_, _] => EdgeKind::D,
            [_, _, "c"] => {
                typed = true;
                EdgeKind::C
            }
            [_, _, "d"] => {
                typed = true;
                EdgeKind::D
            }
            [_, _, other] => {
                return Err(Error::parse(line, format!("unknown edge type `{other}`")))
            }
            _ => return Err(Error::parse(line, "edge line must be `u v [c|d]`")),
        };
        let u = parse_index(toks[0], line, "endpoint")?;
        let v = parse_index(toks[1], line, "endpoint")?;
        for x in [u, v] {
            if x >= n {
                return Err(Error::parse(
                    line,
                    format!("vertex {x} out of range for n = {n}"),
                ));
            }
        }
        if u == v {
            return Err(Error::parse(line, format!("self-loop at vertex {u}")));
        }
        edges.push((line, u, v, kind));
    }
    if edges.len() != m {
        return Err(Error::parse(
            last_line,
            format!("expected {m} edge lines, found {}", edges.len()),
        ));
    }

    if typed {
        let mut tm = TypedMultigraph::new(n);
        for (_, u, v, kind) in edges {
            tm.add_edge(u, v, kind)?;
        }
        Ok(ParsedGraph::Typed(tm))
    } else {
        let mut g = Graph::new(n);
        for (line, u, v, _) in edges {
            g.add_edge(u, v)
                .map_err(|e| Error::parse(line, e.to_string()))?;
        }
        Ok(ParsedGraph::Simple(g))
    }
}

pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn serialize_typed(tm: &TypedMultigraph) -> String {
    let edges = tm.edges();
    let mut out = format!("{} {}\n", tm.vertex_count(), edges.len());
    for (u, v, kind) in edges {
        writeln!(out, "{u} {v} {kind}").unwrap();
    }
    out
}

/// Parses a packing file into a sorted, deduplicated vertex list.
pub fn parse_vertex_set(text: &str) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        for tok in body.split_whitespace() {
            out.push(parse_index(tok, i + 1, "vertex index")?);
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

pub fn format_vertex_set(vertices: &[usize]) -> String {
    let mut out = String::new();
    for (i, v) in vertices.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        write!(out, "{v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::gen_cycle;
    use proptest::prelude::*;

    #[test]
    fn parses_triangle() {
        let g = parse_graph("3 3\n0 1\n1 2\n2 0\n").unwrap();
        assert_eq!(g, ParsedGraph::Simple(gen_cycle(3).unwrap()));
    }

    #[test]
    fn parses_parallel_typed_pair() {
        let ParsedGraph::Typed(tm) = parse_graph("2 2\n0 1 c\n0 1 d\n").unwrap() else {
            panic!("expected typed graph");
        };
        assert!(tm.has_c_edge(0, 1) && tm.has_d_edge(0, 1));
        assert_eq!(tm.degree(0), 2);
    }

    #[test]
    fn rejects_self_loop_with_line_number() {
        let err = parse_graph("2 1\n0 0\n").unwrap_err();
        assert_eq!(err, Error::parse(2, "self-loop at vertex 0"));
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(matches!(parse_graph(""), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(
            parse_graph("3\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_graph("# hi\n2 1\n0 2\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_graph("2 2\n0 1\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_graph("2 1\n0 1\n1 0\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_graph("3 2\n0 1\n1 0\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_graph("2 1\n0 1 x\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let g = parse_graph("# c3\n\n3 3\n# edges\n0 1\n1 2\n\n2 0\n")
            .unwrap()
            .into_simple()
            .unwrap();
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn vertex_set_format() {
        assert_eq!(
            parse_vertex_set("# x\n3 1 # two\n 1 7\n").unwrap(),
            vec![1, 3, 7]
        );
        assert_eq!(format_vertex_set(&[0, 4, 5]), "0 4 5");
        assert!(parse_vertex_set("1 a").is_err());
    }

    proptest! {
        #[test]
        fn typed_round_trip(n in 2usize..12, raw in proptest::collection::vec((0usize..12, 0usize..12, any::<bool>()), 0..30)) {
            let edges: Vec<_> = raw
                .into_iter()
                .map(|(u, v, c)| (u % n, v % n, if c { EdgeKind::C } else { EdgeKind::D }))
                .filter(|(u, v, _)| u != v)
                .collect();
            let tm = TypedMultigraph::from_edges(n, edges).unwrap();
            let back = parse_graph(&serialize_typed(&tm)).unwrap().into_typed();
            prop_assert_eq!(back, tm);
        }

        #[test]
        fn simple_round_trip(n in 1usize..12, raw in proptest::collection::vec((0usize..12, 0usize..12), 0..30)) {
            let mut g = Graph::new(n);
            for (u, v) in raw {
                let (u, v) = (u % n, v % n);
                if u != v && !g.has_edge(u, v) {
                    g.add_edge(u, v).unwrap();
                }
            }
            let back = parse_graph(&serialize_graph(&g)).unwrap().into_simple().unwrap();
            prop_assert_eq!(back, g);
        }
    }
}
