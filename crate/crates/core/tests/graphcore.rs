mod common;

use common::*;
use graphcert::graphcore::{bipartition, large_bipartite_subgraph, unimodularity_check};
use graphcert::graphcore::enumerate::{canonical_form, labeled_graphs, nonisomorphic_graphs};
use graphcert::graphcore::metrics;
use graphcert::graphcore::{classify_walk, extract_odd_cycle, reduce_to_simple_path, WalkKind};
use graphcert::graphcore::enumeration_counts;
use graphcert::{build, Error, Graph, Mode};
use num_traits::ToPrimitive;
use proptest::prelude::*;
use std::collections::HashSet;

#[test]
fn class_counts_match_known_values() {
    let known = [1, 2, 4, 11, 34, 156, 1044];
    for (i, &c) in known.iter().enumerate() {
        assert_eq!(nonisomorphic_graphs(i + 1).unwrap().len(), c, "n = {}", i + 1);
    }
}

#[test]
fn class_count_agrees_with_labelled_codes() {
    for n in 1..=5 {
        let codes: HashSet<u128> = labeled_graphs(n).unwrap().map(|g| canonical_form(&g).0).collect();
        assert_eq!(codes.len(), nonisomorphic_graphs(n).unwrap().len());
    }
}

#[test]
fn labelled_and_even_counts() {
    for n in 1..=5 {
        let (all, even) = enumeration_counts(n).unwrap();
        let gs: Vec<Graph> = labeled_graphs(n).unwrap().collect();
        assert_eq!(all.to_usize().unwrap(), gs.len());
        let ev = gs.iter().filter(|g| g.degrees().iter().all(|d| d % 2 == 0)).count();
        assert_eq!(even.to_usize().unwrap(), ev);
    }
    assert!(enumeration_counts(0).is_err());
}

#[test]
fn build_rejects_bad_input() {
    assert_eq!(build(3, &[(1, 1)], Mode::Simple), Err(Error::LoopInSimple(1)));
    assert!(build(3, &[(1, 1)], Mode::Multi).is_err());
    assert!(build(3, &[(1, 1)], Mode::Pseudo).is_ok());
    assert!(build(3, &[(0, 1), (0, 1)], Mode::Multi).is_ok());
    assert!(Graph::new(2, &[(0, 5)]).is_err());
}

fn floyd(g: &Graph) -> Vec<Vec<Option<usize>>> {
    let n = g.n();
    let mut d = vec![vec![None; n]; n];
    for v in 0..n {
        d[v][v] = Some(0);
    }
    for &(u, v) in g.edges() {
        d[u][v] = Some(1);
        d[v][u] = Some(1);
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

#[test]
fn walk_classes() {
    let c5 = g(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]);
    assert_eq!(classify_walk(&c5, &[0, 1, 2, 3, 4, 0]).unwrap().kind, WalkKind::SimpleCycle);
    assert_eq!(classify_walk(&c5, &[0, 1, 2]).unwrap().kind, WalkKind::Path);
    assert_eq!(classify_walk(&c5, &[0, 1, 0]).unwrap().kind, WalkKind::ClosedWalk);
    assert!(classify_walk(&c5, &[0, 2]).is_err());
    let odd = extract_odd_cycle(&c5, &[0, 1, 2, 3, 4, 0]).unwrap().unwrap();
    assert_eq!(odd.len() % 2, 0, "closed sequence of an odd cycle repeats its start");
    assert_eq!(reduce_to_simple_path(&c5, &[0, 1, 2, 1, 0, 4, 3]).unwrap(), vec![0, 4, 3]);
}

#[test]
fn bipartite_incidence_is_unimodular() {
    let mut r = rng(11);
    for _ in 0..20 {
        let b = random_bipartite(&mut r, 3, 3, 0.6);
        assert!(unimodularity_check(&b, 4).unwrap().totally_unimodular);
    }
    let tri = g(3, &[(0, 1), (1, 2), (0, 2)]);
    let v = unimodularity_check(&tri, 3).unwrap();
    assert!(!v.totally_unimodular);
    assert_eq!(v.violation.unwrap().2.abs(), 2);
}

proptest! {
    #[test]
    fn handshake(gr in arb_graph(12)) {
        let p = gr.degree_profile();
        prop_assert_eq!(p.degree_sum, 2 * gr.m());
        prop_assert_eq!(p.odd_vertices.len() % 2, 0);
    }

    #[test]
    fn canonical_form_is_label_free((gr, p) in arb_graph(9).prop_flat_map(|g| { let n = g.n(); (Just(g), arb_perm(n)) })) {
        prop_assert_eq!(canonical_form(&gr).0, canonical_form(&relabel(&gr, &p)).0);
    }

    #[test]
    fn distances_match_floyd(gr in arb_graph(10)) {
        let m = metrics(&gr);
        prop_assert_eq!(&m.dist, &floyd(&gr));
        prop_assert_eq!(m.cyclomatic + gr.n(), gr.m() + m.component_count);
        if let (Some(r), Some(d)) = (m.radius, m.diameter) {
            prop_assert!(r <= d && d <= 2 * r);
        }
    }

    #[test]
    fn bipartition_witness(gr in arb_graph(9)) {
        let b = bipartition(&gr);
        prop_assert_eq!(b.is_bipartite(), colorable(&gr, 2));
        match b.parts() {
            Some((v1, v2)) => {
                prop_assert_eq!(v1.len() + v2.len(), gr.n());
                prop_assert!(gr.edges().iter().all(|&(u, v)| v1.contains(&u) != v1.contains(&v)));
            }
            None => {
                let Some(odd) = extract_cycle(&b) else { unreachable!() };
                prop_assert_eq!(odd.first(), odd.last());
                let body = &odd[..odd.len() - 1];
                prop_assert_eq!(body.len() % 2, 1);
                prop_assert_eq!(body.iter().collect::<HashSet<_>>().len(), body.len());
                prop_assert!(odd.windows(2).all(|w| gr.has_edge(w[0], w[1])));
            }
        }
    }

    #[test]
    fn half_degree_bipartite_subgraph(gr in arb_graph(12)) {
        let h = large_bipartite_subgraph(&gr);
        prop_assert!(2 * h.edges.len() >= gr.m());
        for v in 0..gr.n() {
            let d = h.edges.iter().filter(|&&(a, b)| a == v || b == v).count();
            prop_assert!(2 * d >= gr.degree(v));
        }
        prop_assert!(h.edges.iter().all(|&(a, b)| h.side[a] != h.side[b]));
    }
}

fn extract_cycle(b: &graphcert::graphcore::Bipartition) -> Option<Vec<usize>> {
    match b {
        graphcert::graphcore::Bipartition::OddCycle(c) => Some(c.clone()),
        _ => None,
    }
}
