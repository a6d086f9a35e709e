mod common;

use common::*;
use graphcert::families::{complete, complete_bipartite, cycle, petersen};
use graphcert::traversal::*;
use graphcert::{Graph, Rational};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

/// Hamiltonian cycle and path existence by DFS over all simple paths.
fn brute_hamilton(g: &Graph) -> (bool, bool) {
    fn go(g: &Graph, path: &mut Vec<usize>, used: &mut [bool], cyc: &mut bool, pth: &mut bool) {
        if path.len() == g.n() {
            *pth = true;
            if g.n() >= 3 && g.has_edge(path[0], *path.last().unwrap()) {
                *cyc = true;
            }
            return;
        }
        let x = *path.last().unwrap();
        for &w in g.neighbors(x) {
            if !used[w] {
                used[w] = true;
                path.push(w);
                go(g, path, used, cyc, pth);
                path.pop();
                used[w] = false;
            }
        }
    }
    let (mut c, mut p) = (false, false);
    for s in 0..g.n() {
        let mut used = vec![false; g.n()];
        used[s] = true;
        go(g, &mut vec![s], &mut used, &mut c, &mut p);
    }
    (c, p)
}

fn brute_toughness(g: &Graph) -> Option<Rational> {
    let n = g.n();
    (0u64..1 << n)
        .filter_map(|s| {
            let c = g.components_without_mask(s);
            (c >= 2).then(|| Rational::new(s.count_ones() as i64, c as i64))
        })
        .min()
}

fn held_karp(w: &[Vec<i64>]) -> i64 {
    let n = w.len();
    if n == 1 {
        return 0;
    }
    let full = 1usize << n;
    let mut dp = vec![vec![i64::MAX; n]; full];
    dp[1][0] = 0;
    for s in 0..full {
        for v in 0..n {
            if dp[s][v] == i64::MAX {
                continue;
            }
            for u in 0..n {
                if s >> u & 1 == 0 {
                    let t = s | 1 << u;
                    dp[t][u] = dp[t][u].min(dp[s][v] + w[v][u]);
                }
            }
        }
    }
    (1..n).map(|v| dp[full - 1][v] + w[v][0]).min().unwrap()
}

#[test]
fn hamilton_search_and_sufficient_conditions() {
    for gr in graphs_upto(7) {
        let r = hamilton(&gr).unwrap();
        let (c, p) = brute_hamilton(&gr);
        assert_eq!(r.cycle.is_some(), c, "{gr:?}");
        assert_eq!(r.path.is_some(), p, "{gr:?}");
        if let Some(cy) = &r.cycle {
            assert_eq!(cy.len(), gr.n());
            assert!((0..gr.n()).all(|i| gr.has_edge(cy[i], cy[(i + 1) % gr.n()])));
        }
        assert!(r.flags_consistent());
        let any = r.dirac || r.ore || r.chvatal_degrees || r.chvatal_erdos || r.goodman_hedetniemi || r.closure_complete;
        assert!(!any || c, "{gr:?}");
        assert!(!(r.ore_path || r.chvatal_erdos_path) || p, "{gr:?}");
        assert_eq!(r.closure_complete, gr.n() >= 3 && closure(&gr).is_complete());
        if c {
            assert!(r.toughness.unwrap().value().is_none_or(|t| t >= Rational::from(1)));
        }
    }
}

#[test]
fn toughness_matches_subset_scan() {
    for gr in graphs_upto(7) {
        assert_eq!(toughness(&gr).unwrap().value(), brute_toughness(&gr), "{gr:?}");
    }
    assert_eq!(toughness(&petersen()).unwrap().value(), Some(Rational::new(4, 3)));
    assert_eq!(toughness(&complete_bipartite(2, 5)).unwrap().value(), Some(Rational::new(2, 5)));
    assert_eq!(toughness(&complete(5)).unwrap(), Toughness::Infinite);
}

#[test]
fn closure_is_order_independent() {
    let mut r = rng(17);
    for _ in 0..200 {
        let n = r.gen_range(3..10);
        let gr = random_graph(&mut r, n, 0.5);
        let mut order: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        order.shuffle(&mut r);
        assert_eq!(closure_in_order(&gr, &order), closure(&gr));
    }
}

#[test]
fn tsp_matches_dynamic_programme() {
    let mut r = rng(5);
    for n in 1..=8 {
        for _ in 0..5 {
            let mut w = vec![vec![0i64; n]; n];
            for i in 0..n {
                for j in i + 1..n {
                    let x = r.gen_range(1..50);
                    w[i][j] = x;
                    w[j][i] = x;
                }
            }
            let t = tsp_bruteforce(&w).unwrap();
            assert_eq!(t.length, held_karp(&w));
            let mut seen = t.tour.clone();
            seen.sort_unstable();
            assert_eq!(seen, (0..n).collect::<Vec<_>>());
            let len: i64 = (0..n).map(|i| w[t.tour[i]][t.tour[(i + 1) % n]]).sum();
            assert_eq!(len, t.length);
        }
    }
    assert!(tsp_bruteforce(&vec![vec![0; 12]; 12]).unwrap_err().is_cap());
}

#[test]
fn hamilton_cap() {
    assert!(hamiltonian_cycle(&cycle(HAMILTON_MAX_N + 1)).unwrap_err().is_cap());
}

proptest! {
    #[test]
    fn euler_verdicts(gr in arb_graph(10)) {
        let odd = gr.degrees().iter().filter(|d| *d % 2 == 1).count();
        let touched: Vec<usize> = (0..gr.n()).filter(|&v| gr.degree(v) > 0).collect();
        let joined = touched.is_empty() || gr.induced(&touched).is_connected();
        let e = euler(&gr);
        let want = match (joined, odd) {
            (true, 0) => EulerKind::Circuit,
            (true, 2) => EulerKind::OpenTrail,
            _ => EulerKind::None,
        };
        prop_assert_eq!(e.kind, want);
        if e.kind != EulerKind::None && gr.m() > 0 {
            prop_assert!(is_euler_walk(&gr, &e.sequence));
            prop_assert!(fleury_admissible(&gr, &e.sequence));
        }
        if e.kind == EulerKind::Circuit && gr.m() > 0 {
            let h = hierholzer(&gr, touched[0]);
            prop_assert!(is_euler_walk(&gr, &h));
            prop_assert_eq!(h.first(), h.last());
        }
    }

    #[test]
    fn cycle_decomposition_when_even(gr in arb_graph(10)) {
        let even = gr.degrees().iter().all(|d| d % 2 == 0);
        let d = cycle_decomposition(&gr);
        prop_assert_eq!(d.is_some(), even);
        if let Some(cycles) = d {
            let mut used = vec![false; gr.m()];
            for c in cycles {
                prop_assert!(c.len() >= 3);
                for i in 0..c.len() {
                    let id = gr.edge_id(c[i], c[(i + 1) % c.len()]).unwrap();
                    prop_assert!(!used[id]);
                    used[id] = true;
                }
            }
            prop_assert!(used.iter().all(|&u| u));
        }
    }
}
