mod common;

use common::*;
use graphcert::families::{complete, complete_bipartite, cycle, hypercube, petersen};
use graphcert::matching::*;
use graphcert::{Graph, Rational};
use proptest::prelude::*;
use rand::Rng;

fn f_factor_brute(g: &Graph, f: &[usize]) -> bool {
    (0u32..1 << g.m()).any(|s| {
        let mut d = vec![0; g.n()];
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            if s >> i & 1 == 1 {
                d[u] += 1;
                d[v] += 1;
            }
        }
        d == f
    })
}

fn brute_width(p: &Poset) -> usize {
    (0u32..1 << p.len())
        .filter(|&s| {
            let v: Vec<usize> = (0..p.len()).filter(|&x| s >> x & 1 == 1).collect();
            p.is_antichain(&v)
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap()
}

fn random_poset(r: &mut impl Rng, n: usize) -> Poset {
    // pairs i < j, closed under transitivity by the constructor's caller
    let mut rel = vec![vec![false; n]; n];
    for (i, row) in rel.iter_mut().enumerate() {
        row[i] = true;
    }
    for i in 0..n {
        for j in i + 1..n {
            if r.gen_bool(0.3) {
                rel[i][j] = true;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if rel[i][k] && rel[k][j] {
                    rel[i][j] = true;
                }
            }
        }
    }
    Poset::new(rel).unwrap()
}

#[test]
fn optimization_numbers_match_brute_force() {
    for gr in graphs_upto(7) {
        let o = optimization_numbers(&gr).unwrap();
        assert_eq!(o.alpha, brute_alpha(&gr));
        assert_eq!(o.beta, brute_vertex_cover(&gr));
        assert_eq!(o.alpha_prime, brute_matching(&gr));
        assert_eq!(o.beta_prime, brute_edge_cover(&gr));
        assert_eq!(o.omega, brute_alpha(&graphcert::transform::complement(&gr)));
        assert!(o.identities_hold(gr.n()));
        assert!(is_matching(&gr, &o.matching));
        assert!(caro_wei(&gr) <= Rational::from(o.alpha as i64));
    }
}

#[test]
fn tutte_berge_matches_brute_force() {
    for gr in graphs_upto(7) {
        let t = matching_deficiency(&gr).unwrap();
        assert_eq!(t.deficiency, gr.n() - 2 * max_matching(&gr).size());
        assert_eq!(t.berge_max, brute_berge(&gr));
        assert_eq!(t.deficiency, t.berge_max);
        assert_eq!(odd_components(&gr, &t.set), t.odd_components);
        assert_eq!(t.odd_components - t.set.len(), t.deficiency);
        assert_eq!(t.perfect_matching.is_some(), t.deficiency == 0);
        assert_eq!(t.tutte_holds, t.deficiency == 0);
    }
}

#[test]
fn named_factorizations() {
    for n in [2, 4, 6, 8, 10] {
        let fs = complete_one_factors(n).unwrap();
        assert_eq!(fs.len(), n - 1);
        let mut all: Vec<(usize, usize)> = fs.iter().flatten().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        all.sort_unstable();
        assert_eq!(all, complete(n).edges());
        assert!(fs.iter().all(|f| f.len() == n / 2 && is_matching(&complete(n), f)));
    }
    assert!(complete_one_factors(5).is_err());
    for (gr, kind) in [
        (complete_bipartite(4, 4), FactorKind::OneRegularBipartite),
        (hypercube(4), FactorKind::OneRegularBipartite),
        (complete(7), FactorKind::TwoEvenRegular),
        (hypercube(4), FactorKind::TwoEvenRegular),
        (complete(8), FactorKind::OneComplete),
    ] {
        let f = factorize(&gr, kind).unwrap();
        assert!(f.verify(&gr), "{kind:?}");
    }
    assert!(factorize(&petersen(), FactorKind::TwoEvenRegular).is_err());
}

#[test]
fn f_factors_match_edge_subset_search() {
    let mut r = rng(23);
    for _ in 0..150 {
        let n = r.gen_range(2..7);
        let gr = random_graph(&mut r, n, 0.6);
        let f: Vec<usize> = (0..n).map(|v| r.gen_range(0..=gr.degree(v))).collect();
        let found = f_factor(&gr, &f).unwrap();
        assert_eq!(found.is_some(), f_factor_brute(&gr, &f), "{gr:?} {f:?}");
        if let Some(h) = found {
            assert_eq!(h.degrees(), f);
            assert!(h.edges().iter().all(|&(u, v)| gr.has_edge(u, v)));
        }
    }
    for k in 1..=3 {
        assert_eq!(f_factor(&petersen(), &[k; 10]).unwrap().is_some(), has_k_factor(&petersen(), k));
    }
}

#[test]
fn arboricity_matches_forest_search() {
    for gr in graphs_upto(6) {
        let a = arboricity(&gr).unwrap();
        assert_eq!(a.value, brute_arboricity(&gr), "{gr:?}");
        assert_eq!(nash_williams(&gr).unwrap().0, a.value);
        assert_eq!(a.forests.len(), a.value);
        assert!(a.forests.iter().all(|f| is_forest(gr.n(), f)));
        assert_eq!(a.forests.iter().map(|f| f.len()).sum::<usize>(), gr.m());
        if a.value > 0 {
            assert!(forest_decomposition(&gr, a.value - 1).is_none());
        }
    }
    let mut r = rng(31);
    for _ in 0..40 {
        let n = r.gen_range(8..=12);
        let gr = random_graph(&mut r, n, 0.7);
        let a = arboricity(&gr).unwrap();
        assert!(a.forests.iter().all(|f| is_forest(n, f)));
        assert!(a.value == 0 || forest_decomposition(&gr, a.value - 1).is_none());
    }
    assert_eq!(arboricity(&complete(8)).unwrap().value, 4);
    assert_eq!(arboricity(&petersen()).unwrap().value, 2);
}

#[test]
fn dilworth_routes_agree() {
    let mut r = rng(29);
    for _ in 0..200 {
        let n = r.gen_range(1..=10);
        let p = random_poset(&mut r, n);
        let w = brute_width(&p);
        for rep in [dilworth(&p).unwrap(), dilworth_bruteforce(&p).unwrap(), dilworth_by_matching(&p)] {
            assert_eq!(rep.antichain.len(), w);
            assert_eq!(rep.chains.len(), w);
            assert!(p.is_antichain(&rep.antichain));
            assert!(rep.chains.iter().all(|c| p.is_chain(c)));
            let mut all: Vec<usize> = rep.chains.concat();
            all.sort_unstable();
            assert_eq!(all, (0..n).collect::<Vec<_>>());
        }
    }
    assert!(Poset::from_pairs(2, &[(0, 1), (1, 0)]).is_err());
}

fn has_sdr(sets: &[Vec<usize>]) -> bool {
    fn go(sets: &[Vec<usize>], i: usize, used: &mut Vec<usize>) -> bool {
        i == sets.len()
            || sets[i].iter().any(|&x| {
                if used.contains(&x) {
                    return false;
                }
                used.push(x);
                let ok = go(sets, i + 1, used);
                used.pop();
                ok
            })
    }
    go(sets, 0, &mut Vec::new())
}

proptest! {
    #[test]
    fn matching_routes(gr in arb_graph(12)) {
        let m = max_matching(&gr);
        prop_assert!(is_matching(&gr, &m.edges));
        prop_assert_eq!(m.size(), brute_matching(&gr));
        prop_assert_eq!(max_matching_search(&gr).unwrap().size(), m.size());
    }

    #[test]
    fn konig_cover(a in 1usize..6, b in 1usize..6, seed in any::<u64>()) {
        let gr = random_bipartite(&mut rng(seed), a, b, 0.4);
        let left: Vec<usize> = (0..a).collect();
        let bm = bipartite_matching(&gr, Some(&left)).unwrap();
        prop_assert!(is_matching(&gr, &bm.matching.edges));
        prop_assert_eq!(bm.matching.size(), bm.cover.len());
        prop_assert!(gr.edges().iter().all(|&(u, v)| bm.cover.contains(&u) || bm.cover.contains(&v)));
        prop_assert_eq!(bm.matching.size(), brute_matching(&gr));
        match &bm.hall_violator {
            Some(s) => prop_assert!(gr.set_neighborhood(s).len() < s.len()),
            None => prop_assert_eq!(bm.matching.size(), bm.left.len()),
        }
    }

    #[test]
    fn transversals(sets in proptest::collection::vec(proptest::collection::vec(0usize..6, 0..4), 1..6)) {
        match sdr(&sets) {
            SdrOutcome::Transversal(t) => {
                prop_assert!(has_sdr(&sets));
                prop_assert!(t.iter().zip(&sets).all(|(x, s)| s.contains(x)));
                let mut u = t.clone();
                u.sort_unstable();
                u.dedup();
                prop_assert_eq!(u.len(), sets.len());
            }
            SdrOutcome::Violator(ix) => {
                prop_assert!(!has_sdr(&sets));
                let mut u: Vec<usize> = ix.iter().flat_map(|&i| sets[i].clone()).collect();
                u.sort_unstable();
                u.dedup();
                prop_assert!(u.len() < ix.len());
            }
        }
    }

    #[test]
    fn konig_egervary(rows in proptest::collection::vec(proptest::collection::vec(0u8..2, 4), 1..5)) {
        let mm = matrix_minmax(&rows).unwrap();
        prop_assert_eq!(mm.ones.len(), mm.lines.len());
        prop_assert!(mm.ones.iter().all(|&(i, j)| rows[i][j] == 1));
        for (i, row) in rows.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                if x == 1 {
                    prop_assert!(mm.lines.contains(&Line::Row(i)) || mm.lines.contains(&Line::Col(j)));
                }
            }
        }
    }

    #[test]
    fn even_cycles_have_perfect_matchings(k in 2usize..20) {
        prop_assert!(max_matching(&cycle(2 * k)).is_perfect(2 * k));
    }
}
