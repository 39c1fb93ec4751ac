//! Line-oriented graph file format.
//!
//! ```text
//! # comment
//! n m
//! u v            (m edge lines)
//! rot u: v1 v2 … (optional cyclic neighbor order)
//! arc u v c      (optional arc color; `arc u u c` colors vertex u)
//! ```

use std::fmt::Write as _;

use super::{ColoredGraph, Vertex};
use crate::error::{Error, ParseErrorKind, Result};

fn err(line: usize, kind: ParseErrorKind) -> Error {
    Error::Parse { line, kind }
}

fn parse_num<T: std::str::FromStr>(tok: &str, line: usize) -> Result<T> {
    tok.parse().map_err(|_| {
        err(
            line,
            ParseErrorKind::Malformed(format!("`{tok}` is not a number")),
        )
    })
}

fn parse_vertex(tok: &str, n: usize, line: usize) -> Result<Vertex> {
    let v: Vertex = parse_num(tok, line)?;
    if v >= n {
        return Err(err(line, ParseErrorKind::VertexOutOfRange { vertex: v, n }));
    }
    Ok(v)
}

pub fn parse_graph(text: &str) -> Result<ColoredGraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| err(1, ParseErrorKind::MissingHeader))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 2 {
        return Err(err(
            header_line,
            ParseErrorKind::Malformed("header must be `n m`".into()),
        ));
    }
    let n: usize = parse_num(toks[0], header_line)?;
    let m: usize = parse_num(toks[1], header_line)?;

    let mut g = ColoredGraph::new(n);
    let mut edges_read = 0;
    let mut last_line = header_line;
    let mut rotation: Vec<Option<Vec<Vertex>>> = vec![None; n];
    let mut rotation_lines: Vec<usize> = vec![0; n];
    let mut any_rotation = false;
    let mut arcs: Vec<(usize, Vertex, Vertex, u64)> = Vec::new();

    for (line, content) in lines {
        last_line = line;
        if let Some(rest) = content.strip_prefix("rot") {
            if edges_read < m {
                return Err(err(
                    line,
                    ParseErrorKind::EdgeCount {
                        expected: m,
                        found: edges_read,
                    },
                ));
            }
            let (head, tail) = rest.split_once(':').ok_or_else(|| {
                err(
                    line,
                    ParseErrorKind::Malformed("rotation line needs `:`".into()),
                )
            })?;
            let u = parse_vertex(head.trim(), n, line)?;
            if rotation[u].is_some() {
                return Err(err(
                    line,
                    ParseErrorKind::RotationInconsistent {
                        vertex: u,
                        reason: "rotation given twice".into(),
                    },
                ));
            }
            let order = tail
                .split_whitespace()
                .map(|t| parse_vertex(t, n, line))
                .collect::<Result<Vec<_>>>()?;
            rotation[u] = Some(order);
            rotation_lines[u] = line;
            any_rotation = true;
        } else if let Some(rest) = content.strip_prefix("arc") {
            if edges_read < m {
                return Err(err(
                    line,
                    ParseErrorKind::EdgeCount {
                        expected: m,
                        found: edges_read,
                    },
                ));
            }
            let toks: Vec<&str> = rest.split_whitespace().collect();
            if toks.len() != 3 {
                return Err(err(
                    line,
                    ParseErrorKind::Malformed("expected `arc u v c`".into()),
                ));
            }
            let u = parse_vertex(toks[0], n, line)?;
            let v = parse_vertex(toks[1], n, line)?;
            let c: u64 = parse_num(toks[2], line)?;
            arcs.push((line, u, v, c));
        } else {
            if edges_read >= m {
                return Err(err(
                    line,
                    ParseErrorKind::Malformed(format!("unexpected line `{content}`")),
                ));
            }
            let toks: Vec<&str> = content.split_whitespace().collect();
            if toks.len() != 2 {
                return Err(err(
                    line,
                    ParseErrorKind::Malformed("expected `u v`".into()),
                ));
            }
            let u = parse_vertex(toks[0], n, line)?;
            let v = parse_vertex(toks[1], n, line)?;
            if u == v {
                return Err(err(line, ParseErrorKind::Loop(u)));
            }
            if g.adjacent(u, v) {
                return Err(err(line, ParseErrorKind::DuplicateEdge(u.min(v), u.max(v))));
            }
            g.add_edge(u, v).expect("checked above");
            edges_read += 1;
        }
    }
    if edges_read < m {
        return Err(err(
            last_line,
            ParseErrorKind::EdgeCount {
                expected: m,
                found: edges_read,
            },
        ));
    }

    for (line, u, v, c) in arcs {
        if !g.in_arc_domain(u, v) {
            return Err(err(line, ParseErrorKind::ArcOutsideDomain(u, v)));
        }
        g.set_arc_color(u, v, c).expect("checked domain");
    }

    if any_rotation {
        let mut full = Vec::with_capacity(n);
        for (v, order) in rotation.into_iter().enumerate() {
            let order = match order {
                Some(o) => o,
                None if g.degree(v) == 0 => Vec::new(),
                None => {
                    return Err(err(
                        last_line,
                        ParseErrorKind::RotationInconsistent {
                            vertex: v,
                            reason: "no rotation given".into(),
                        },
                    ))
                }
            };
            let mut sorted = order.clone();
            sorted.sort_unstable();
            if sorted != g.neighbors(v) {
                return Err(err(
                    rotation_lines[v].max(1),
                    ParseErrorKind::RotationInconsistent {
                        vertex: v,
                        reason: format!("lists {:?}, neighbors are {:?}", order, g.neighbors(v)),
                    },
                ));
            }
            full.push(order);
        }
        g = g.with_rotation(full).expect("validated above");
    }
    Ok(g)
}

/// Serializes `g` in the graph file format. Arc lines are written only for
/// non-zero colors, so a monochromatic graph round-trips without them.
pub fn write_graph(g: &ColoredGraph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.n(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    if let Some(rot) = g.rotation() {
        for (v, order) in rot.iter().enumerate() {
            let list: Vec<String> = order.iter().map(|w| w.to_string()).collect();
            writeln!(out, "rot {v}: {}", list.join(" ")).unwrap();
        }
    }
    if let Some(colors) = g.arc_colors() {
        for (&(u, v), &c) in colors {
            if c != 0 {
                writeln!(out, "arc {u} {v} {c}").unwrap();
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let g = parse_graph("3 3\n0 1\n1 2\n0 2\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 3);
        assert!(g.is_complete());
        assert!(g.arc_colors().is_none());
        assert!(g.rotation().is_none());
    }

    #[test]
    fn tetrahedron_with_rotation_and_colors() {
        let text = "# tetrahedron\n4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n\
                    rot 0: 1 2 3\nrot 1: 0 3 2\nrot 2: 0 1 3\nrot 3: 0 2 1\narc 0 0 4\narc 1 2 7\n";
        let g = parse_graph(text).unwrap();
        assert_eq!((g.n(), g.edge_count()), (4, 6));
        assert_eq!(super::super::faces(&g).unwrap().len(), 4);
        assert_eq!(g.vertex_color(0), 4);
        assert_eq!(g.arc_color(1, 2), Some(7));
        assert_eq!(g.arc_color(2, 1), Some(0));
        let back = parse_graph(&write_graph(&g)).unwrap();
        assert_eq!(back, g);
    }

    fn kind(text: &str) -> (usize, ParseErrorKind) {
        match parse_graph(text) {
            Err(Error::Parse { line, kind }) => (line, kind),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn loop_error() {
        assert_eq!(kind("2 1\n0 0\n"), (2, ParseErrorKind::Loop(0)));
    }

    #[test]
    fn duplicate_edge_error() {
        assert_eq!(
            kind("3 2\n0 1\n1 0\n"),
            (3, ParseErrorKind::DuplicateEdge(0, 1))
        );
    }

    #[test]
    fn malformed_and_count_errors() {
        assert!(matches!(
            kind("3 1\n0 x\n"),
            (2, ParseErrorKind::Malformed(_))
        ));
        assert!(matches!(
            kind("3 2\n0 1\n"),
            (
                2,
                ParseErrorKind::EdgeCount {
                    expected: 2,
                    found: 1
                }
            )
        ));
        assert!(matches!(
            kind("3 1\n0 5\n"),
            (2, ParseErrorKind::VertexOutOfRange { vertex: 5, n: 3 })
        ));
        assert!(matches!(kind(""), (1, ParseErrorKind::MissingHeader)));
    }

    #[test]
    fn rotation_inconsistent_error() {
        let (line, k) = kind("3 2\n0 1\n1 2\nrot 0: 1\nrot 1: 0 2\nrot 2: 0\n");
        assert_eq!(line, 6);
        assert!(matches!(
            k,
            ParseErrorKind::RotationInconsistent { vertex: 2, .. }
        ));
    }

    #[test]
    fn arc_outside_domain_error() {
        let (line, k) = kind("3 1\n0 1\narc 0 2 1\n");
        assert_eq!(line, 3);
        assert_eq!(k, ParseErrorKind::ArcOutsideDomain(0, 2));
    }
}
