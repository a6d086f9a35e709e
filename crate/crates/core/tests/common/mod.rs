//! Brute-force oracles and graph generators shared by the integration tests.
#![allow(dead_code)]

use graphcert::graphcore::enumerate::nonisomorphic_graphs;
use graphcert::Graph;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// One graph per isomorphism class, orders 1..=n.
pub fn graphs_upto(n: usize) -> Vec<Graph> {
    (1..=n).flat_map(|k| nonisomorphic_graphs(k).unwrap()).collect()
}

pub fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::new(n, edges).unwrap()
}

/// Edges given with 1-based labels.
pub fn g1(n: usize, edges: &[(usize, usize)]) -> Graph {
    let e: Vec<(usize, usize)> = edges.iter().map(|&(u, v)| (u - 1, v - 1)).collect();
    Graph::new(n, &e).unwrap()
}

pub fn random_graph(r: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut e = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if r.gen_bool(p) {
                e.push((u, v));
            }
        }
    }
    Graph::from_edges(n, e)
}

pub fn random_bipartite(r: &mut ChaCha8Rng, a: usize, b: usize, p: f64) -> Graph {
    let mut e = Vec::new();
    for u in 0..a {
        for v in 0..b {
            if r.gen_bool(p) {
                e.push((u, a + v));
            }
        }
    }
    Graph::from_edges(a + b, e)
}

/// Stacked triangulation with some edges removed; planar by construction.
pub fn random_planar(r: &mut ChaCha8Rng, n: usize, keep: f64) -> Graph {
    assert!(n >= 3);
    let mut e = vec![(0, 1), (1, 2), (0, 2)];
    let mut faces = vec![[0, 1, 2], [0, 1, 2]];
    for v in 3..n {
        let f = faces.swap_remove(r.gen_range(0..faces.len()));
        for &x in &f {
            e.push((x, v));
        }
        faces.push([f[0], f[1], v]);
        faces.push([f[1], f[2], v]);
        faces.push([f[0], f[2], v]);
    }
    let kept: Vec<(usize, usize)> = e.into_iter().filter(|_| r.gen_bool(keep)).collect();
    Graph::from_edges(n, kept)
}

fn adj_masks(g: &Graph) -> Vec<u64> {
    (0..g.n()).map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w)).collect()
}

pub fn brute_alpha(g: &Graph) -> usize {
    let a = adj_masks(g);
    (0u64..1 << g.n())
        .filter(|&s| (0..g.n()).all(|v| s >> v & 1 == 0 || a[v] & s == 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn brute_vertex_cover(g: &Graph) -> usize {
    (0u64..1 << g.n())
        .filter(|&s| g.edges().iter().all(|&(u, v)| s >> u & 1 == 1 || s >> v & 1 == 1))
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap_or(0)
}

/// Largest matching: the least free vertex stays unmatched or takes a free neighbour.
pub fn brute_matching(g: &Graph) -> usize {
    fn go(g: &Graph, free: u64) -> usize {
        if free == 0 {
            return 0;
        }
        let v = free.trailing_zeros() as usize;
        let rest = free & !(1 << v);
        let mut best = go(g, rest);
        for &w in g.neighbors(v) {
            if rest >> w & 1 == 1 {
                best = best.max(1 + go(g, rest & !(1 << w)));
            }
        }
        best
    }
    go(g, (1u64 << g.n()) - 1)
}

/// Smallest edge cover: the least uncovered vertex picks one of its edges.
pub fn brute_edge_cover(g: &Graph) -> Option<usize> {
    if (0..g.n()).any(|v| g.degree(v) == 0) {
        return None;
    }
    fn go(g: &Graph, open: u64) -> usize {
        if open == 0 {
            return 0;
        }
        let v = open.trailing_zeros() as usize;
        g.neighbors(v).iter().map(|&w| 1 + go(g, open & !(1 << v) & !(1 << w))).min().unwrap()
    }
    Some(go(g, (1u64 << g.n()) - 1))
}

fn components_in(g: &Graph, alive: u64) -> Vec<u64> {
    let a = adj_masks(g);
    let mut left = alive;
    let mut out = Vec::new();
    while left != 0 {
        let mut comp = left & left.wrapping_neg();
        loop {
            let grow = (0..g.n()).filter(|&v| comp >> v & 1 == 1).fold(comp, |c, v| c | (a[v] & alive));
            if grow == comp {
                break;
            }
            comp = grow;
        }
        out.push(comp);
        left &= !comp;
    }
    out
}

/// max over S of o(G − S) − |S|.
pub fn brute_berge(g: &Graph) -> usize {
    let full = (1u64 << g.n()) - 1;
    (0u64..1 << g.n())
        .map(|s| {
            let odd = components_in(g, full & !s).iter().filter(|c| c.count_ones() % 2 == 1).count();
            odd.saturating_sub(s.count_ones() as usize)
        })
        .max()
        .unwrap_or(0)
}

/// Whether a proper k-coloring exists, by plain backtracking.
pub fn colorable(g: &Graph, k: usize) -> bool {
    fn go(g: &Graph, v: usize, k: usize, c: &mut [usize]) -> bool {
        if v == g.n() {
            return true;
        }
        for col in 1..=k {
            if g.neighbors(v).iter().all(|&w| w > v || c[w] != col) {
                c[v] = col;
                if go(g, v + 1, k, c) {
                    return true;
                }
            }
        }
        false
    }
    go(g, 0, k, &mut vec![0; g.n()])
}

pub fn brute_chi(g: &Graph) -> usize {
    (0..).find(|&k| colorable(g, k)).unwrap()
}

/// Edge subsets in which every vertex has degree exactly k.
pub fn has_k_factor(g: &Graph, k: usize) -> bool {
    fn go(es: &[(usize, usize)], i: usize, deg: &mut [usize], k: usize) -> bool {
        if i == es.len() {
            return deg.iter().all(|&d| d == k);
        }
        let (u, v) = es[i];
        // u must be finished once its last edge is passed
        let last_u = es[i + 1..].iter().all(|&(a, b)| a != u && b != u);
        if deg[u] < k && deg[v] < k {
            deg[u] += 1;
            deg[v] += 1;
            let ok = go(es, i + 1, deg, k);
            deg[u] -= 1;
            deg[v] -= 1;
            if ok {
                return true;
            }
        }
        if last_u && deg[u] != k {
            return false;
        }
        go(es, i + 1, deg, k)
    }
    go(g.edges(), 0, &mut vec![0; g.n()], k)
}

pub fn is_forest(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] == x {
            x
        } else {
            let r = find(p, p[x]);
            p[x] = r;
            r
        }
    }
    edges.iter().all(|&(u, v)| {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        parent[a] = b;
        a != b
    })
}

/// Least k such that the edges split into k forests, by assigning edges in order.
pub fn brute_arboricity(g: &Graph) -> usize {
    fn go(g: &Graph, i: usize, parts: &mut Vec<Vec<(usize, usize)>>, k: usize) -> bool {
        if i == g.m() {
            return true;
        }
        let e = g.edges()[i];
        let used = parts.len();
        for p in 0..k.min(used + 1) {
            if p == used {
                parts.push(Vec::new());
            }
            parts[p].push(e);
            if is_forest(g.n(), &parts[p]) && go(g, i + 1, parts, k) {
                return true;
            }
            parts[p].pop();
            if p == used {
                parts.pop();
            }
        }
        false
    }
    if g.m() == 0 {
        return 0;
    }
    (1..).find(|&k| go(g, 0, &mut Vec::new(), k)).unwrap()
}

/// Smallest vertex set separating non-adjacent u and v.
pub fn brute_vertex_separator(g: &Graph, u: usize, v: usize) -> usize {
    let full = (1u64 << g.n()) - 1;
    (0u64..1 << g.n())
        .filter(|&s| s >> u & 1 == 0 && s >> v & 1 == 0)
        .filter(|&s| components_in(g, full & !s).iter().all(|c| (c >> u & 1) != (c >> v & 1) || c >> u & 1 == 0))
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap()
}

/// Smallest edge set separating u and v: the least boundary of a set holding u but not v.
pub fn brute_edge_separator(g: &Graph, u: usize, v: usize) -> usize {
    (0u64..1 << g.n())
        .filter(|&s| s >> u & 1 == 1 && s >> v & 1 == 0)
        .map(|s| g.edges().iter().filter(|&&(a, b)| (s >> a & 1) != (s >> b & 1)).count())
        .min()
        .unwrap()
}

/// Whether the edges can be ordered into a closed or open trail using each once.
pub fn is_euler_walk(g: &Graph, seq: &[usize]) -> bool {
    let mut used = vec![false; g.m()];
    seq.windows(2).all(|w| match g.edge_id(w[0], w[1]) {
        Some(id) if !used[id] => {
            used[id] = true;
            true
        }
        _ => false,
    }) && used.iter().all(|&u| u)
}

/// Random simple graphs on 1..=max_n vertices.
pub fn arb_graph(max_n: usize) -> impl proptest::strategy::Strategy<Value = Graph> {
    use proptest::prelude::*;
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let all = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::from_edges(n, all.zip(bits).filter(|p| p.1).map(|p| p.0))
        })
    })
}

/// Random permutation of 0..n.
pub fn arb_perm(n: usize) -> impl proptest::strategy::Strategy<Value = Vec<usize>> {
    use proptest::prelude::*;
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}

pub fn relabel(g: &Graph, p: &[usize]) -> Graph {
    Graph::from_edges(g.n(), g.edges().iter().map(|&(u, v)| (p[u], p[v])))
}
