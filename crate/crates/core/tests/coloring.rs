mod common;

use common::*;
use graphcert::coloring::*;
use graphcert::families::{complete, complete_bipartite, cycle, petersen};
use graphcert::transform::{complement, line_graph, total_graph};
use graphcert::Graph;
use proptest::prelude::*;
use rand::Rng;

/// max over induced subgraphs of the minimum degree.
fn brute_degeneracy(g: &Graph) -> usize {
    (1u64..1 << g.n())
        .map(|s| {
            let vs: Vec<usize> = (0..g.n()).filter(|&v| s >> v & 1 == 1).collect();
            g.induced(&vs).min_degree()
        })
        .max()
        .unwrap_or(0)
}

#[test]
fn chromatic_number_matches_backtracking() {
    for gr in graphs_upto(7) {
        let r = chromatic_number(&gr).unwrap();
        assert_eq!(r.chi, brute_chi(&gr), "{gr:?}");
        assert!(is_proper(&gr, &r.coloring));
        assert_eq!(r.coloring.distinct(), r.chi);
        assert!(r.bounds_hold(gr.n()));
    }
    assert_eq!(chromatic_number(&petersen()).unwrap().chi, 3);
}

#[test]
fn nordhaus_gaddum_bounds() {
    for gr in graphs_upto(7) {
        let ng = nordhaus_gaddum_check(&gr).unwrap();
        assert!(ng.all_hold(), "{gr:?}");
        assert_eq!(ng.chi_complement, brute_chi(&complement(&gr)));
    }
}

#[test]
fn chromatic_index_matches_line_graph() {
    for gr in graphs_upto(6).into_iter().filter(|g| g.m() > 0) {
        let ci = chromatic_index(&gr).unwrap();
        assert_eq!(ci.chi_prime, brute_chi(&line_graph(&gr)), "{gr:?}");
        assert!(is_proper(&gr, &ci.coloring));
        assert_eq!(ci.class == 1, ci.chi_prime == gr.max_degree());
        if ci.overfull {
            assert_eq!(ci.class, 2);
        }
        assert_eq!(ci.overfull, is_overfull(&gr));
    }
    assert_eq!(chromatic_index(&petersen()).unwrap().chi_prime, 4);
}

#[test]
fn total_coloring_matches_total_graph() {
    for gr in graphs_upto(5) {
        let t = total_color(&gr, TotalScheme::Exact).unwrap();
        assert!(is_proper(&gr, &t));
        assert_eq!(t.k, brute_chi(&total_graph(&gr)), "{gr:?}");
    }
}

#[test]
fn total_schemes() {
    for n in 1..=9 {
        let t = total_color(&complete(n), TotalScheme::Complete).unwrap();
        assert!(is_proper(&complete(n), &t));
        assert_eq!(t.k, if n % 2 == 1 { n } else { n + 1 });
    }
    for a in 1..=5 {
        for b in 1..=5 {
            let g = complete_bipartite(a, b);
            let t = total_color(&g, TotalScheme::CompleteBipartite).unwrap();
            assert!(is_proper(&g, &t));
            assert_eq!(t.k, a.max(b) + 1 + usize::from(a == b), "K{a},{b}");
        }
    }
    let mut r = rng(41);
    for _ in 0..100 {
        let g = random_bipartite(&mut r, 5, 6, 0.5);
        let t = total_color(&g, TotalScheme::BipartitePlus2).unwrap();
        assert!(is_proper(&g, &t) && t.k <= g.max_degree() + 2);
    }
    assert!(total_color(&cycle(5), TotalScheme::BipartitePlus2).is_err());
    assert!(total_color(&cycle(5), TotalScheme::Complete).is_err());
}

#[test]
fn complete_graph_edge_colorings() {
    for n in 2..=12 {
        let c = complete_edge_coloring(&complete(n)).unwrap();
        assert!(is_proper(&complete(n), &c));
        assert_eq!(c.k, if n % 2 == 0 { n - 1 } else { n });
    }
}

#[test]
fn five_coloring_planar_graphs() {
    let mut r = rng(43);
    for _ in 0..200 {
        let n = r.gen_range(3..40);
        let g = random_planar(&mut r, n, 0.9);
        let c = five_color_planar(&g, true).unwrap();
        assert!(is_proper(&g, &c) && c.k <= 5);
    }
    assert!(five_color_planar(&complete(7), false).is_err());
    assert!(five_color_planar(&complete(5), true).is_err());
}

proptest! {
    #[test]
    fn greedy_bounds(gr in arb_graph(10)) {
        let d = degeneracy(&gr);
        prop_assert_eq!(d, brute_degeneracy(&gr));
        let (order, dd) = smallest_last(&gr);
        prop_assert_eq!(dd, d);
        let sl = greedy_in_order(&gr, &order).unwrap();
        prop_assert!(is_proper(&gr, &sl) && sl.k <= d + 1);
        let wp = greedy_color(&gr, GreedyOrder::WelshPowell, None).unwrap();
        prop_assert!(is_proper(&gr, &wp) && wp.k <= welsh_powell_bound(&gr));
        prop_assert!(welsh_powell_bound(&gr) <= gr.max_degree() + 1);
        let chi = chromatic_number(&gr).unwrap().chi;
        prop_assert!(chi <= sl.k && chi <= wp.k);
    }

    #[test]
    fn vizing_within_one(gr in arb_graph(12)) {
        let (c, _) = vizing(&gr);
        prop_assert!(is_proper(&gr, &c));
        prop_assert!(c.k <= gr.max_degree() + 1);
    }

    #[test]
    fn konig_routes(a in 1usize..7, b in 1usize..7, p in 0.1f64..0.9, seed in any::<u64>()) {
        let g = random_bipartite(&mut rng(seed), a, b, p);
        let fast = konig_edge_coloring(&g).unwrap();
        let slow = konig_regularized(&g).unwrap();
        for c in [&fast, &slow] {
            prop_assert!(is_proper(&g, c));
            prop_assert_eq!(c.k, g.max_degree());
        }
    }

    #[test]
    fn odd_cycles_need_three(k in 1usize..20) {
        let c = cycle(2 * k + 1);
        prop_assert_eq!(chromatic_number(&c).unwrap().chi, 3);
        prop_assert_eq!(chromatic_index(&c).unwrap().chi_prime, 3);
        prop_assert!(konig_edge_coloring(&c).is_err());
    }
}
