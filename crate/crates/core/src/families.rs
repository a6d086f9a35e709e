//! Named graph families, extremal counts and graphs built from set systems.

use crate::error::{cap_check, Error, Result};
use crate::graphcore::enumerate::nonisomorphic_graphs;
use crate::graphcore::Graph;
use crate::transform;
use serde::Serialize;
use std::collections::BTreeSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Complete(usize),
    CompleteBipartite(usize, usize),
    CompleteMultipartite(Vec<usize>),
    Path(usize),
    Cycle(usize),
    Hypercube(usize),
    /// K_{1,k}: center 0 and k leaves.
    Star(usize),
    /// W_n = K_1 + C_{n-1}: hub 0 and rim 1..n-1.
    Wheel(usize),
    Petersen,
    Heawood,
    Turan(usize, usize),
    CyclePower(usize, usize),
    Hamming(Vec<usize>),
    Grotzsch,
    Sylvester,
    Dodecahedron,
    Icosahedron,
}

impl std::str::FromStr for FamilySpec {
    type Err = Error;

    /// Parses `name` or `name:p1,p2,...`, e.g. `turan:7,3` or `petersen`.
    fn from_str(s: &str) -> Result<FamilySpec> {
        let (name, args) = s.split_once(':').unwrap_or((s, ""));
        let ps: Vec<usize> = if args.is_empty() {
            Vec::new()
        } else {
            args.split(',')
                .map(|a| {
                    a.trim()
                        .parse()
                        .map_err(|_| Error::BadParams(format!("bad parameter {a:?}")))
                })
                .collect::<Result<_>>()?
        };
        let want = |k: usize| {
            if ps.len() == k {
                Ok(())
            } else {
                Err(Error::BadParams(format!("{name} takes {k} parameter(s)")))
            }
        };
        let spec = match name {
            "complete" => want(1).map(|_| FamilySpec::Complete(ps[0]))?,
            "complete_bipartite" => want(2).map(|_| FamilySpec::CompleteBipartite(ps[0], ps[1]))?,
            "complete_multipartite" => FamilySpec::CompleteMultipartite(ps),
            "path" => want(1).map(|_| FamilySpec::Path(ps[0]))?,
            "cycle" => want(1).map(|_| FamilySpec::Cycle(ps[0]))?,
            "hypercube" => want(1).map(|_| FamilySpec::Hypercube(ps[0]))?,
            "star" => want(1).map(|_| FamilySpec::Star(ps[0]))?,
            "wheel" => want(1).map(|_| FamilySpec::Wheel(ps[0]))?,
            "petersen" => want(0).map(|_| FamilySpec::Petersen)?,
            "heawood" => want(0).map(|_| FamilySpec::Heawood)?,
            "turan" => want(2).map(|_| FamilySpec::Turan(ps[0], ps[1]))?,
            "cycle_power" => want(2).map(|_| FamilySpec::CyclePower(ps[0], ps[1]))?,
            "hamming" => FamilySpec::Hamming(ps),
            "grotzsch" => want(0).map(|_| FamilySpec::Grotzsch)?,
            "sylvester" => want(0).map(|_| FamilySpec::Sylvester)?,
            "dodecahedron" => want(0).map(|_| FamilySpec::Dodecahedron)?,
            "icosahedron" => want(0).map(|_| FamilySpec::Icosahedron)?,
            _ => return Err(Error::BadParams(format!("unknown family {name:?}"))),
        };
        Ok(spec)
    }
}

fn bad(msg: &str) -> Error {
    Error::BadParams(msg.to_string())
}

/// Part sizes of T_{n,r}: the first n mod r parts get ⌈n/r⌉ vertices.
pub fn turan_parts(n: usize, r: usize) -> Vec<usize> {
    (0..r).map(|i| n / r + usize::from(i < n % r)).collect()
}

pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

pub fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn complete_multipartite(parts: &[usize]) -> Graph {
    let n: usize = parts.iter().sum();
    let mut part = Vec::with_capacity(n);
    for (i, &p) in parts.iter().enumerate() {
        part.extend(std::iter::repeat_n(i, p));
    }
    Graph::from_edges(
        n,
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| part[u] != part[v]),
    )
}

pub fn complete_bipartite(m: usize, n: usize) -> Graph {
    complete_multipartite(&[m, n])
}

/// Q_d on bit strings; vertices differing in one bit are adjacent.
pub fn hypercube(d: usize) -> Graph {
    let n = 1usize << d;
    Graph::from_edges(
        n,
        (0..n).flat_map(|u| (0..d).map(move |b| (u, u ^ 1 << b))),
    )
}

pub fn petersen() -> Graph {
    let mut e = Vec::new();
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
        e.push((i, i + 5));
        e.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::from_edges(10, e)
}

pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    use FamilySpec::*;
    let g = match spec {
        Complete(n) => {
            if *n == 0 {
                return Err(bad("complete graph needs n >= 1"));
            }
            complete(*n)
        }
        CompleteBipartite(m, n) => {
            if *m == 0 || *n == 0 {
                return Err(bad("both sides must be nonempty"));
            }
            complete_bipartite(*m, *n)
        }
        CompleteMultipartite(parts) => {
            if parts.is_empty() || parts.contains(&0) {
                return Err(bad("parts must be nonempty"));
            }
            complete_multipartite(parts)
        }
        Path(n) => {
            if *n == 0 {
                return Err(bad("path needs n >= 1"));
            }
            path(*n)
        }
        Cycle(n) => {
            if *n < 3 {
                return Err(bad("cycle needs n >= 3"));
            }
            cycle(*n)
        }
        Hypercube(d) => {
            if *d > 16 {
                return Err(bad("hypercube dimension above 16"));
            }
            hypercube(*d)
        }
        Star(k) => Graph::from_edges(k + 1, (1..=*k).map(|i| (0, i))),
        Wheel(n) => {
            if *n < 4 {
                return Err(bad("wheel needs n >= 4"));
            }
            let rim = n - 1;
            Graph::from_edges(
                *n,
                (1..*n).flat_map(|i| [(0, i), (i, i % rim + 1)]),
            )
        }
        Petersen => petersen(),
        Heawood => Graph::from_edges(
            14,
            (0..14).flat_map(|i| {
                let mut v = vec![(i, (i + 1) % 14)];
                if i % 2 == 0 {
                    v.push((i, (i + 5) % 14));
                }
                v
            }),
        ),
        Turan(n, r) => {
            if *r == 0 || r > n {
                return Err(bad("turan needs 1 <= r <= n"));
            }
            complete_multipartite(&turan_parts(*n, *r))
        }
        CyclePower(n, k) => {
            if *k == 0 || 2 * k >= *n {
                return Err(bad("cycle power needs 1 <= k < n/2"));
            }
            Graph::from_edges(
                *n,
                (0..*n).flat_map(|i| (1..=*k).map(move |j| (i, (i + j) % n))),
            )
        }
        Hamming(ms) => {
            if ms.is_empty() || ms.contains(&0) {
                return Err(bad("hamming needs nonempty positive radices"));
            }
            let n: usize = ms.iter().product();
            let digits = |mut x: usize| {
                let mut d = vec![0; ms.len()];
                for i in (0..ms.len()).rev() {
                    d[i] = x % ms[i];
                    x /= ms[i];
                }
                d
            };
            let all: Vec<Vec<usize>> = (0..n).map(digits).collect();
            Graph::from_edges(
                n,
                (0..n)
                    .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                    .filter(|&(u, v)| {
                        all[u].iter().zip(&all[v]).filter(|(a, b)| a != b).count() == 1
                    }),
            )
        }
        Grotzsch => transform::mycielski(&cycle(5)),
        Sylvester => sylvester(),
        Dodecahedron => {
            let mut e = Vec::new();
            for i in 0..5 {
                e.push((i, (i + 1) % 5));
                e.push((i, 5 + 2 * i));
                e.push((15 + i, 15 + (i + 1) % 5));
                e.push((15 + i, 5 + 2 * i + 1));
            }
            for j in 0..10 {
                e.push((5 + j, 5 + (j + 1) % 10));
            }
            Graph::from_edges(20, e)
        }
        Icosahedron => {
            let mut e = Vec::new();
            for i in 0..5 {
                e.push((0, 1 + i));
                e.push((1 + i, 1 + (i + 1) % 5));
                e.push((6 + i, 6 + (i + 1) % 5));
                e.push((1 + i, 6 + i));
                e.push((1 + i, 6 + (i + 1) % 5));
                e.push((11, 6 + i));
            }
            Graph::from_edges(12, e)
        }
    };
    Ok(g)
}

/// Cubic graph with three bridges and no perfect matching: a center joined to
/// three copies of K_4 with one edge subdivided.
fn sylvester() -> Graph {
    let mut e = Vec::new();
    for b in 0..3 {
        let x = 1 + 5 * b;
        let (a, bb, c, d) = (x + 1, x + 2, x + 3, x + 4);
        e.extend([(0, x), (x, a), (x, bb), (a, c), (a, d), (bb, c), (bb, d), (c, d)]);
    }
    Graph::from_edges(16, e)
}

/// Forbidden pattern for extremal questions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Pattern {
    /// K_r.
    Clique(usize),
    C4,
}

impl Pattern {
    pub fn find_in(self, g: &Graph) -> Option<Vec<usize>> {
        match self {
            Pattern::Clique(r) => find_clique(g, r),
            Pattern::C4 => find_c4(g),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalReport {
    pub n: usize,
    pub pattern: Pattern,
    /// Edge bound from the closed form, when one applies.
    pub bound: Option<usize>,
    pub edges: Option<usize>,
    pub within_bound: Option<bool>,
    /// Vertices of a copy of the pattern (a C_4 is listed in cyclic order).
    pub occurrence: Option<Vec<usize>>,
    /// Graph attaining the extremal value.
    pub extremal_graph: Option<Vec<(usize, usize)>>,
    /// Exact ex(n, F) when computed by enumeration.
    pub ex: Option<usize>,
    /// Σ C(d(v), 2) and C(n, 2), for the C_4 criterion.
    pub pair_counts: Option<(usize, usize)>,
}

impl ExtremalReport {
    fn new(n: usize, pattern: Pattern) -> ExtremalReport {
        ExtremalReport {
            n,
            pattern,
            bound: None,
            edges: None,
            within_bound: None,
            occurrence: None,
            extremal_graph: None,
            ex: None,
            pair_counts: None,
        }
    }
}

/// First clique of size r found by ascending backtracking.
pub fn find_clique(g: &Graph, r: usize) -> Option<Vec<usize>> {
    fn go(g: &Graph, r: usize, cur: &mut Vec<usize>, cand: Vec<usize>) -> bool {
        if cur.len() == r {
            return true;
        }
        if cur.len() + cand.len() < r {
            return false;
        }
        for (i, &v) in cand.iter().enumerate() {
            let next: Vec<usize> = cand[i + 1..].iter().copied().filter(|&w| g.has_edge(v, w)).collect();
            cur.push(v);
            if go(g, r, cur, next) {
                return true;
            }
            cur.pop();
        }
        false
    }
    let mut cur = Vec::new();
    go(g, r, &mut cur, (0..g.n()).collect()).then_some(cur)
}

/// A 4-cycle u, a, w, b: two length-2 paths with the same ends.
pub fn find_c4(g: &Graph) -> Option<Vec<usize>> {
    for u in 0..g.n() {
        for w in u + 1..g.n() {
            let common: Vec<usize> = g
                .neighbors(u)
                .iter()
                .copied()
                .filter(|&x| g.has_edge(x, w))
                .take(2)
                .collect();
            if common.len() == 2 {
                return Some(vec![u, common[0], w, common[1]]);
            }
        }
    }
    None
}

/// Compares a graph with the Turán bound for K_{r+1} (r = 2 is Mantel's bound).
pub fn mantel_turan_graph(g: &Graph, r: usize) -> Result<ExtremalReport> {
    if r == 0 {
        return Err(bad("r must be at least 1"));
    }
    let n = g.n();
    let pattern = Pattern::Clique(r + 1);
    let mut rep = ExtremalReport::new(n, pattern);
    let bound = if r >= n {
        n * n.saturating_sub(1) / 2
    } else {
        complete_multipartite(&turan_parts(n, r)).m()
    };
    rep.bound = Some(bound);
    rep.edges = Some(g.m());
    rep.within_bound = Some(g.m() <= bound);
    rep.occurrence = pattern.find_in(g);
    Ok(rep)
}

/// ex(n, K_{r+1}) with T_{n,r} as the extremal graph.
pub fn mantel_turan_params(n: usize, r: usize) -> Result<ExtremalReport> {
    if r == 0 || n == 0 {
        return Err(bad("need n >= 1 and r >= 1"));
    }
    let t = complete_multipartite(&turan_parts(n, r.min(n)));
    let mut rep = ExtremalReport::new(n, Pattern::Clique(r + 1));
    rep.bound = Some(t.m());
    rep.extremal_graph = Some(t.edges().to_vec());
    Ok(rep)
}

/// m ≤ (n/4)(1 + √(4n − 3)) decided exactly by isolating the root and squaring.
pub fn reiman_bound_holds(n: usize, m: usize) -> bool {
    let lhs = 4 * m as i128 - n as i128;
    lhs <= 0 || lhs * lhs <= (n as i128).pow(2) * (4 * n as i128 - 3)
}

/// C_4 criterion and bound check. If Σ C(d,2) exceeds C(n,2) two vertices share two
/// neighbours, and a 4-cycle is returned.
pub fn reiman_c4_report(g: &Graph) -> ExtremalReport {
    let n = g.n();
    let mut rep = ExtremalReport::new(n, Pattern::C4);
    let s: usize = g.degrees().iter().map(|&d| d * d.saturating_sub(1) / 2).sum();
    rep.pair_counts = Some((s, n * n.saturating_sub(1) / 2));
    rep.edges = Some(g.m());
    rep.within_bound = Some(reiman_bound_holds(n, g.m()));
    rep.occurrence = find_c4(g);
    rep
}

pub const EX_MAX_N: usize = 7;

/// ex(n, F) by scanning every isomorphism class on n vertices.
pub fn ex_bruteforce(n: usize, pattern: Pattern) -> Result<ExtremalReport> {
    cap_check("order for ex enumeration", n, EX_MAX_N)?;
    let mut rep = ExtremalReport::new(n, pattern);
    let mut best: Option<Graph> = None;
    for g in nonisomorphic_graphs(n)? {
        if best.as_ref().is_some_and(|b| b.m() >= g.m()) {
            continue;
        }
        if pattern.find_in(&g).is_none() {
            best = Some(g);
        }
    }
    let best = best.unwrap_or_else(|| Graph::empty(n));
    rep.ex = Some(best.m());
    rep.extremal_graph = Some(best.edges().to_vec());
    Ok(rep)
}

/// Graph built from a set system, with the labels of its ground elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetSystemGraph {
    pub graph: Graph,
    /// Distinct elements of the union, ascending.
    pub elements: Vec<usize>,
}

/// Bipartite incidence graph: elements are vertices `0..s` (ascending labels),
/// sets follow in the given order.
pub fn incidence_graph(sets: &[Vec<usize>]) -> Result<SetSystemGraph> {
    if sets.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let elements: Vec<usize> = sets.iter().flatten().copied().collect::<BTreeSet<_>>().into_iter().collect();
    let s = elements.len();
    let idx = |x: usize| elements.binary_search(&x).unwrap();
    let graph = Graph::from_edges(
        s + sets.len(),
        sets.iter()
            .enumerate()
            .flat_map(|(j, f)| f.iter().map(move |&x| (idx(x), s + j))),
    );
    Ok(SetSystemGraph { graph, elements })
}

/// Intersection graph: sets are vertices, joined when they meet.
pub fn intersection_graph(sets: &[Vec<usize>]) -> Result<Graph> {
    if sets.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let sets: Vec<BTreeSet<usize>> = sets.iter().map(|s| s.iter().copied().collect()).collect();
    let k = sets.len();
    Ok(Graph::from_edges(
        k,
        (0..k)
            .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
            .filter(|&(i, j)| !sets[i].is_disjoint(&sets[j])),
    ))
}

/// Interval graph of closed intervals `[a, b]`.
pub fn interval_graph(intervals: &[(i64, i64)]) -> Result<Graph> {
    if intervals.is_empty() {
        return Err(Error::EmptyFamily);
    }
    if let Some(&(a, b)) = intervals.iter().find(|(a, b)| a > b) {
        return Err(Error::BadParams(format!("interval [{a}, {b}] is empty")));
    }
    let k = intervals.len();
    Ok(Graph::from_edges(
        k,
        (0..k)
            .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
            .filter(|&(i, j)| {
                let (a, b) = intervals[i];
                let (c, d) = intervals[j];
                a.max(c) <= b.min(d)
            }),
    ))
}

/// F_i = {v_i} ∪ ∂(v_i), with vertex i as element i and edge j as element n + j.
/// Its intersection graph is `g` under the identity labelling.
pub fn marczewski_family(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut sets: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    for (j, &(u, v)) in g.edges().iter().enumerate() {
        sets[u].push(n + j);
        sets[v].push(n + j);
    }
    sets
}
