//! The graph file format and the dot export.
//!
//! A graph file is a header line `n <count>` followed by edge lines
//! `b <tail> <head>` (blue) or `r <tail> <head>` (red). Blank lines and
//! `#` comments are ignored; duplicate edge lines are idempotent.

use crate::graph::TwoColoredDigraph;
use crate::relation::Relation;
use crate::universe::{Universe, VertexSet};
use crate::{Error, Result};
use std::fmt::Write as _;

/// Largest vertex count a graph file may declare. Relations are dense
/// bit matrices, so a runaway header would otherwise translate into
/// gigabytes of allocation.
pub const MAX_FILE_VERTICES: usize = 16_384;

pub fn parse_graph(text: &str) -> Result<TwoColoredDigraph> {
    let mut universe: Option<Universe> = None;
    let mut blue: Vec<(usize, usize)> = Vec::new();
    let mut red: Vec<(usize, usize)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let fail = |message: String| Error::Parse { line, message };
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut fields = content.split_whitespace();
        let tag = fields.next().expect("content is nonempty");
        match (tag, universe) {
            ("n", Some(_)) => return Err(fail("duplicate header line".into())),
            ("n", None) => {
                let count = fields
                    .next()
                    .ok_or_else(|| fail("header needs a vertex count".into()))?;
                let n: usize = count
                    .parse()
                    .map_err(|_| fail(format!("bad vertex count {count:?}")))?;
                if n > MAX_FILE_VERTICES {
                    return Err(fail(format!(
                        "vertex count {n} exceeds the dense-representation limit {MAX_FILE_VERTICES}"
                    )));
                }
                if fields.next().is_some() {
                    return Err(fail("trailing fields after the vertex count".into()));
                }
                universe = Some(Universe::new(n));
            }
            ("b" | "r", None) => {
                return Err(fail("edge line before the `n <count>` header".into()))
            }
            ("b" | "r", Some(u)) => {
                let mut endpoint = || -> Result<usize> {
                    let field = fields
                        .next()
                        .ok_or_else(|| fail("edge lines need a tail and a head".into()))?;
                    let v: usize = field
                        .parse()
                        .map_err(|_| fail(format!("bad vertex {field:?}")))?;
                    if !u.contains(v) {
                        return Err(fail(format!(
                            "vertex {v} out of range for {} vertices",
                            u.size()
                        )));
                    }
                    Ok(v)
                };
                let tail = endpoint()?;
                let head = endpoint()?;
                if fields.next().is_some() {
                    return Err(fail("trailing fields after the edge".into()));
                }
                if tag == "b" {
                    blue.push((tail, head));
                } else {
                    red.push((tail, head));
                }
            }
            (other, _) => {
                return Err(fail(format!(
                    "expected `n`, `b`, or `r`, found {other:?}"
                )))
            }
        }
    }

    let universe = universe.ok_or(Error::Parse {
        line: text.lines().count() + 1,
        message: "missing `n <count>` header".into(),
    })?;
    let blue = Relation::from_pairs(universe, blue)?;
    let red = Relation::from_pairs(universe, red)?;
    TwoColoredDigraph::new(blue, red)
}

/// Renders a graph back into the file format, edges sorted, so that
/// `parse_graph(render_graph(g)) == g`.
pub fn render_graph(g: &TwoColoredDigraph) -> String {
    let mut out = format!("n {}\n", g.universe().size());
    for (tail, head) in g.blue().pairs() {
        writeln!(out, "b {tail} {head}").expect("string writes cannot fail");
    }
    for (tail, head) in g.red().pairs() {
        writeln!(out, "r {tail} {head}").expect("string writes cannot fail");
    }
    out
}

/// Dot export with per-color edge attributes; members of `highlight`
/// are drawn with a double border. Output is byte-stable for a fixed
/// input.
pub fn render_dot(g: &TwoColoredDigraph, highlight: Option<&VertexSet>) -> String {
    let mut out = String::from("digraph g {\n");
    if !g.universe().is_empty() {
        out.push_str("    node [shape=circle];\n");
    }
    for v in g.universe().vertices() {
        if highlight.is_some_and(|s| s.contains(v)) {
            writeln!(out, "    {v} [shape=doublecircle];").expect("string writes cannot fail");
        } else {
            writeln!(out, "    {v};").expect("string writes cannot fail");
        }
    }
    for (tail, head) in g.blue().pairs() {
        writeln!(out, "    {tail} -> {head} [color=blue];").expect("string writes cannot fail");
    }
    for (tail, head) in g.red().pairs() {
        writeln!(out, "    {tail} -> {head} [color=red];").expect("string writes cannot fail");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::random_graph;

    #[test]
    fn parses_a_single_vertex() {
        let g = parse_graph("n 1").unwrap();
        assert_eq!(g.universe().size(), 1);
        assert!(g.blue().is_empty() && g.red().is_empty());
    }

    #[test]
    fn duplicate_edges_are_idempotent() {
        let g = parse_graph("n 2\nb 0 1\nb 0 1\n").unwrap();
        assert_eq!(g.blue().pairs(), vec![(0, 1)]);
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = "# a graph\n\nn 3\n b 0 1  # inline comment\n\nr 2 2\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g.blue().pairs(), vec![(0, 1)]);
        assert_eq!(g.red().pairs(), vec![(2, 2)]);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = parse_graph("n 2\nb 0\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 2,
                message: "edge lines need a tail and a head".into()
            }
        );

        let err = parse_graph("n 2\n\nq 0 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));

        let err = parse_graph("n 2\nb 0 5\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));

        let err = parse_graph("b 0 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));

        let err = parse_graph("# nothing\n").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));

        let err = parse_graph("n 99999999\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
    }

    #[test]
    fn round_trip_on_random_graphs() {
        for seed in 0..40 {
            let g = random_graph((seed % 9) as usize, 0.3, 0.3, seed);
            assert_eq!(parse_graph(&render_graph(&g)).unwrap(), g);
        }
    }

    #[test]
    fn dot_export_of_empty_graph_is_bare() {
        let g = TwoColoredDigraph::empty(Universe::new(0));
        assert_eq!(render_dot(&g, None), "digraph g {\n}\n");
    }

    #[test]
    fn dot_export_single_blue_edge() {
        let g = parse_graph("n 2\nb 0 1\n").unwrap();
        let dot = render_dot(&g, None);
        assert_eq!(dot.matches("->").count(), 1);
        assert!(dot.contains("0 -> 1 [color=blue];"));
    }

    #[test]
    fn dot_export_is_stable_and_marks_the_set() {
        let g = parse_graph("n 3\nb 0 1\nr 1 2\n").unwrap();
        let s = VertexSet::of(g.universe(), [2]).unwrap();
        let a = render_dot(&g, Some(&s));
        let b = render_dot(&g, Some(&s));
        assert_eq!(a, b);
        assert!(a.contains("2 [shape=doublecircle];"));
        assert!(a.contains("1 -> 2 [color=red];"));
    }
}
