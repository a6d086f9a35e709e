//! Text formats: edge lists, integer matrices and DOT output.
//!
//! Edge list grammar, one item per line:
//!
//! ```text
//! # comment lines anywhere
//! n m mode          mode is simple, multi or pseudo
//! u v               m lines, 0-based endpoints
//! ```

use crate::coloring::{ColorAssignment, Target};
use crate::error::{Error, Result};
use crate::graphcore::{build, AnyGraph, Graph, Mode};
use std::fmt::Write;

/// Non-comment, non-blank lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_usize(tok: &str, line: usize) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::Parse { line, msg: format!("expected a non-negative integer, got {tok:?}") })
}

pub fn parse_edge_list(text: &str) -> Result<AnyGraph> {
    let mut lines = content_lines(text);
    let Some((hl, header)) = lines.next() else {
        return Err(Error::Parse { line: 1, msg: "missing header `n m mode`".into() });
    };
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 3 {
        return Err(Error::Parse { line: hl, msg: "header must be `n m mode`".into() });
    }
    let n = parse_usize(toks[0], hl)?;
    let m = parse_usize(toks[1], hl)?;
    let mode: Mode = toks[2]
        .parse()
        .map_err(|_| Error::Parse { line: hl, msg: format!("unknown mode {:?}", toks[2]) })?;
    let mut edges = Vec::with_capacity(m);
    let mut last = hl;
    for (ln, l) in lines {
        let t: Vec<&str> = l.split_whitespace().collect();
        if t.len() != 2 {
            return Err(Error::Parse { line: ln, msg: "edge line must be `u v`".into() });
        }
        let (u, v) = (parse_usize(t[0], ln)?, parse_usize(t[1], ln)?);
        if u >= n || v >= n {
            return Err(Error::Parse { line: ln, msg: format!("vertex out of range 0..{n}") });
        }
        if edges.len() == m {
            return Err(Error::Parse { line: ln, msg: format!("more than {m} edges") });
        }
        edges.push((u, v));
        last = ln;
    }
    if edges.len() != m {
        return Err(Error::Parse { line: last + 1, msg: format!("expected {m} edges, found {}", edges.len()) });
    }
    build(n, &edges, mode).map_err(|e| Error::Parse { line: hl, msg: e.to_string() })
}

/// Parses a simple graph.
pub fn parse_simple(text: &str) -> Result<Graph> {
    match parse_edge_list(text)? {
        AnyGraph::Simple(g) => Ok(g),
        AnyGraph::Multi(g) => g.to_simple(),
    }
}

pub fn emit_edge_list(g: &AnyGraph) -> String {
    let mut s = format!("{} {} {}\n", g.n(), g.edges().len(), g.mode().as_str());
    for &(u, v) in g.edges() {
        writeln!(s, "{u} {v}").unwrap();
    }
    s
}

pub fn emit_simple(g: &Graph) -> String {
    emit_edge_list(&AnyGraph::Simple(g.clone()))
}

/// Whitespace-separated integer rows; rows may differ in length.
pub fn parse_matrix(text: &str) -> Result<Vec<Vec<i64>>> {
    content_lines(text)
        .map(|(ln, l)| {
            l.split([' ', '\t', ','])
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<i64>().map_err(|_| Error::Parse { line: ln, msg: format!("bad integer {t:?}") }))
                .collect()
        })
        .collect()
}

const PALETTE: [&str; 12] = [
    "red", "blue", "green", "orange", "purple", "brown", "cyan", "magenta", "gold", "gray", "olive", "navy",
];

fn color_name(c: usize) -> String {
    PALETTE.get(c.wrapping_sub(1)).map_or_else(|| format!("c{c}"), |s| s.to_string())
}

/// Undirected DOT; colored elements carry `color` and `label` attributes.
pub fn emit_dot(g: &Graph, coloring: Option<&ColorAssignment>) -> String {
    let (vc, ec): (Option<&[usize]>, Option<&[usize]>) = match coloring {
        None => (None, None),
        Some(c) => match c.target {
            Target::Vertices => (Some(&c.colors), None),
            Target::Edges => (None, Some(&c.colors)),
            Target::Total => (Some(&c.colors[..g.n()]), Some(&c.colors[g.n()..])),
        },
    };
    let mut s = String::from("graph G {\n");
    for v in 0..g.n() {
        match vc {
            Some(c) => writeln!(s, "  {v} [color={}, label=\"{v}:{}\"];", color_name(c[v]), c[v]).unwrap(),
            None => writeln!(s, "  {v};").unwrap(),
        }
    }
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        match ec {
            Some(c) => writeln!(s, "  {u} -- {v} [color={}, label=\"{}\"];", color_name(c[i]), c[i]).unwrap(),
            None => writeln!(s, "  {u} -- {v};").unwrap(),
        }
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let g = parse_simple("# K3\n3 3 simple\n0 1\n1 2\n0 2\n").unwrap();
        assert_eq!(g.m(), 3);
        assert_eq!(emit_simple(&g), "3 3 simple\n0 1\n0 2\n1 2\n");
    }

    #[test]
    fn header_error_line() {
        match parse_edge_list("3 x simple\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 1),
            other => panic!("{other:?}"),
        }
    }
}
