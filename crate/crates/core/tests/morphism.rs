mod common;

use common::*;
use graphcert::families::{complete, complete_bipartite, cycle, hypercube, path, petersen};
use graphcert::morphism::*;
use graphcert::Graph;
use proptest::prelude::*;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                go(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Isomorphisms g → h in lexicographic order, by scanning every permutation.
fn brute_isos(g: &Graph, h: &Graph) -> Vec<Vec<usize>> {
    if g.n() != h.n() || g.m() != h.m() {
        return Vec::new();
    }
    permutations(g.n())
        .into_iter()
        .filter(|p| g.edges().iter().all(|&(u, v)| h.has_edge(p[u], p[v])))
        .collect()
}

#[test]
fn group_orders() {
    let cases = [
        (petersen(), 120),
        (complete_bipartite(3, 3), 72),
        (cycle(7), 14),
        (hypercube(3), 48),
        (path(5), 2),
        (complete(5), 120),
    ];
    for (gr, order) in cases {
        let aut = automorphisms(&gr, 12).unwrap();
        assert_eq!(aut.len(), order);
        let perms: Vec<Vec<usize>> = aut.into_iter().map(|a| a.map).collect();
        assert!(is_group(&perms));
    }
}

#[test]
fn automorphism_counts_match_brute_force() {
    for gr in graphs_upto(6) {
        let brute = brute_isos(&gr, &gr);
        let aut: Vec<Vec<usize>> = automorphisms(&gr, 10).unwrap().into_iter().map(|a| a.map).collect();
        assert_eq!(aut, brute);
    }
}

#[test]
fn asymmetric_graphs_on_six_vertices() {
    let asym = graphs_upto(6)
        .iter()
        .filter(|g| g.n() == 6 && transitivity(g, 10).unwrap().asymmetric)
        .count();
    assert_eq!(asym, 8);
    let small = graphs_upto(5).iter().filter(|g| g.n() > 1 && transitivity(g, 10).unwrap().asymmetric).count();
    assert_eq!(small, 0);
}

#[test]
fn transitivity_flags() {
    let t = transitivity(&petersen(), 12).unwrap();
    assert!(t.vertex_transitive && t.edge_transitive);
    assert_eq!(t.vertex_orbits.len(), 1);
    let s = transitivity(&complete_bipartite(2, 3), 12).unwrap();
    assert!(!s.vertex_transitive && s.edge_transitive);
    assert_eq!(s.vertex_orbits, vec![vec![0, 1], vec![2, 3, 4]]);
    let p = transitivity(&path(4), 12).unwrap();
    assert_eq!(p.edge_orbits.len(), 2);
}

#[test]
fn caps_are_reported() {
    let big = cycle(12);
    assert!(isomorphic(&big, &big, 10).unwrap_err().is_cap());
    assert!(automorphisms(&big, 10).unwrap_err().is_cap());
    assert!(homomorphism(&big, &complete(2), 10).unwrap_err().is_cap());
}

#[test]
fn homomorphism_to_clique_is_coloring() {
    for gr in graphs_upto(6) {
        for k in 1..=4 {
            let h = homomorphism(&gr, &complete(k), 10).unwrap();
            assert_eq!(h.is_some(), colorable(&gr, k));
            if let Some(f) = h {
                assert!(is_homomorphism(&gr, &complete(k), &f.map));
            }
        }
    }
}

proptest! {
    #[test]
    fn relabelled_copy_is_found((gr, p) in arb_graph(7).prop_flat_map(|g| { let n = g.n(); (Just(g), arb_perm(n)) })) {
        let h = relabel(&gr, &p);
        let f = isomorphic(&gr, &h, 10).unwrap().unwrap();
        prop_assert!(is_isomorphism(&gr, &h, &f.map));
        prop_assert_eq!(&f.map, &brute_isos(&gr, &h)[0]);
    }

    #[test]
    fn nonisomorphic_pairs_rejected(a in arb_graph(6), b in arb_graph(6)) {
        let found = isomorphic(&a, &b, 10).unwrap();
        prop_assert_eq!(found.is_some(), !brute_isos(&a, &b).is_empty());
    }
}
