mod common;

use common::*;
use graphcert::coloring::{chromatic_number, vizing};
use graphcert::io::*;
use graphcert::{build, AnyGraph, Error, Mode};
use proptest::prelude::*;

fn line_of(e: Error) -> usize {
    match e {
        Error::Parse { line, .. } => line,
        other => panic!("expected a parse error, got {other:?}"),
    }
}

#[test]
fn comments_and_modes() {
    let text = "# a triangle with a pendant\n\n4 4 simple\n0 1\n# inner comment\n1 2\n0 2\n2 3\n";
    let g = parse_simple(text).unwrap();
    assert_eq!((g.n(), g.m()), (4, 4));
    let m = parse_edge_list("2 3 multi\n0 1\n0 1\n1 0\n").unwrap();
    assert!(matches!(m, AnyGraph::Multi(_)));
    assert_eq!(m.edges().len(), 3);
    assert!(parse_edge_list("2 1 pseudo\n1 1\n").is_ok());
}

#[test]
fn errors_name_the_line() {
    assert_eq!(line_of(parse_edge_list("").unwrap_err()), 1);
    assert_eq!(line_of(parse_edge_list("# c\n3 1\n").unwrap_err()), 2);
    assert_eq!(line_of(parse_edge_list("3 1 simple\n0 x\n").unwrap_err()), 2);
    assert_eq!(line_of(parse_edge_list("3 1 simple\n0 3\n").unwrap_err()), 2);
    assert_eq!(line_of(parse_edge_list("3 2 simple\n0 1\n").unwrap_err()), 3);
    assert_eq!(line_of(parse_edge_list("3 1 simple\n0 1\n1 2\n").unwrap_err()), 3);
    assert_eq!(line_of(parse_edge_list("3 1 simple\n1 1\n").unwrap_err()), 1);
    assert_eq!(line_of(parse_edge_list("3 1 wobbly\n0 1\n").unwrap_err()), 1);
    assert!(parse_simple("3 2 pseudo\n0 0\n0 1\n").is_err());
}

#[test]
fn matrices() {
    let m = parse_matrix("# weights\n0 3,4\n3\t0 5\n\n4 5 0\n").unwrap();
    assert_eq!(m, vec![vec![0, 3, 4], vec![3, 0, 5], vec![4, 5, 0]]);
    assert_eq!(line_of(parse_matrix("1 2\n3 q\n").unwrap_err()), 2);
    assert_eq!(parse_matrix("-1 7").unwrap(), vec![vec![-1, 7]]);
}

#[test]
fn dot_output() {
    let g = graphcert::families::cycle(5);
    let plain = emit_dot(&g, None);
    assert!(plain.starts_with("graph G {") && plain.trim_end().ends_with('}'));
    assert_eq!(plain.matches(" -- ").count(), 5);
    let c = chromatic_number(&g).unwrap().coloring;
    let dot = emit_dot(&g, Some(&c));
    assert_eq!(dot.matches("color=").count(), 5);
    let (e, _) = vizing(&g);
    assert_eq!(emit_dot(&g, Some(&e)).matches("-- ").count(), 5);
}

proptest! {
    #[test]
    fn simple_round_trip(gr in arb_graph(12)) {
        prop_assert_eq!(parse_simple(&emit_simple(&gr)).unwrap(), gr);
    }

    #[test]
    fn multi_round_trip(n in 1usize..8, raw in proptest::collection::vec((0usize..8, 0usize..8), 0..15), loops in any::<bool>()) {
        let edges: Vec<(usize, usize)> = raw.into_iter().map(|(u, v)| (u % n, v % n)).filter(|&(u, v)| loops || u != v).collect();
        let mode = if loops { Mode::Pseudo } else { Mode::Multi };
        let g = build(n, &edges, mode).unwrap();
        let back = parse_edge_list(&emit_edge_list(&g)).unwrap();
        prop_assert_eq!(back.edges(), g.edges());
        prop_assert_eq!(back.mode(), g.mode());
    }
}
