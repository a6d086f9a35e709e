//! Cut vertices and bridges, κ and λ with certificates, disjoint paths, ears.

mod flow;

use crate::error::{cap_check, Error, Result};
use crate::graphcore::{subsets, Graph};
use crate::transform::contract_edge;
use flow::Flow;
use serde::Serialize;
use std::collections::VecDeque;

/// Up to this order cut vertices and bridges are found by remove-and-count.
pub const CUT_RECOMPUTE_MAX_N: usize = 40;
/// Up to this order κ and λ are also found by subset enumeration.
pub const SUBSET_MAX_N: usize = 16;
/// Largest order handled by the flow computations of κ and λ.
pub const FLOW_MAX_N: usize = 200;
/// Largest order for the cycle-enumeration clauses of [`two_connected_checks`].
pub const CYCLE_CLAUSE_MAX_N: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CutMethod {
    Recompute,
    Lowpoint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutStructure {
    pub cut_vertices: Vec<usize>,
    pub bridges: Vec<(usize, usize)>,
    pub method: CutMethod,
}

/// Cut vertices and bridges, by recomputation for small graphs and lowpoints above.
pub fn cut_structure(g: &Graph) -> CutStructure {
    if g.n() <= CUT_RECOMPUTE_MAX_N {
        cut_structure_recompute(g)
    } else {
        cut_structure_lowpoint(g)
    }
}

/// v is a cut vertex iff c(G − v) > c(G); e is a bridge iff c(G − e) > c(G).
pub fn cut_structure_recompute(g: &Graph) -> CutStructure {
    let n = g.n();
    let c = g.component_count();
    let cut_vertices = (0..n)
        .filter(|&v| {
            let mut rm = vec![false; n];
            rm[v] = true;
            g.component_labels_without(&rm, None).1 > c
        })
        .collect();
    let bridges = (0..g.m())
        .filter(|&e| {
            let mut re = vec![false; g.m()];
            re[e] = true;
            g.component_labels_without(&vec![false; n], Some(&re)).1 > c
        })
        .map(|e| g.edges()[e])
        .collect();
    CutStructure {
        cut_vertices,
        bridges,
        method: CutMethod::Recompute,
    }
}

/// Single depth-first pass with discovery times and lowpoints.
pub fn cut_structure_lowpoint(g: &Graph) -> CutStructure {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut is_cut = vec![false; n];
    let mut bridges = Vec::new();
    let mut time = 0;
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        // (vertex, parent, next neighbour index)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(&mut (v, p, ref mut i)) = stack.last_mut() {
            if *i < g.neighbors(v).len() {
                let w = g.neighbors(v)[*i];
                *i += 1;
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, 0));
                } else if w != p {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if p != usize::MAX {
                    low[p] = low[p].min(low[v]);
                    if low[v] > disc[p] {
                        bridges.push((p.min(v), p.max(v)));
                    }
                    if p != root && low[v] >= disc[p] {
                        is_cut[p] = true;
                    }
                }
            }
        }
        is_cut[root] = root_children >= 2;
    }
    bridges.sort_unstable();
    CutStructure {
        cut_vertices: (0..n).filter(|&v| is_cut[v]).collect(),
        bridges,
        method: CutMethod::Lowpoint,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConnectivityNumbers {
    pub kappa: usize,
    pub lambda: usize,
    pub delta: usize,
    /// Removing these vertices disconnects G or leaves K_1.
    pub vertex_cut: Vec<usize>,
    /// Removing these edges disconnects G (empty when n ≤ 1).
    pub edge_cut: Vec<(usize, usize)>,
    /// κ and λ from subset enumeration, when n is small enough.
    pub kappa_by_subsets: Option<usize>,
    pub lambda_by_subsets: Option<usize>,
}

impl ConnectivityNumbers {
    /// Both routes agree wherever both ran, and κ ≤ λ ≤ δ.
    pub fn consistent(&self) -> bool {
        self.kappa_by_subsets.is_none_or(|k| k == self.kappa)
            && self.lambda_by_subsets.is_none_or(|l| l == self.lambda)
            && self.kappa <= self.lambda
            && (self.lambda <= self.delta)
    }
}

fn split_network(g: &Graph) -> Flow {
    // v_in = 2v, v_out = 2v + 1
    let n = g.n();
    let big = n as u32 + 1;
    let mut f = Flow::new(2 * n + 1);
    for v in 0..n {
        f.add(2 * v, 2 * v + 1, 1);
    }
    for &(a, b) in g.edges() {
        f.add(2 * a + 1, 2 * b, big);
        f.add(2 * b + 1, 2 * a, big);
    }
    f
}

fn split_paths(f: &mut Flow, s: usize, t: usize) -> Vec<Vec<usize>> {
    // the extra last node is the fan sink
    let sink = f.node_count() - 1;
    f.decompose(s, t)
        .into_iter()
        .map(|walk| {
            let mut p: Vec<usize> = Vec::new();
            for x in walk {
                let v = x / 2;
                if x < sink && p.last() != Some(&v) {
                    p.push(v);
                }
            }
            p
        })
        .collect()
}

/// Vertices whose in-copy is reachable and out-copy is not.
fn split_cut(f: &Flow, s: usize, n: usize) -> Vec<usize> {
    let r = f.reachable(s);
    (0..n).filter(|&v| r[2 * v] && !r[2 * v + 1]).collect()
}

/// Maximum number of internally disjoint u–v paths for non-adjacent u ≠ v.
fn vertex_flow(g: &Graph, u: usize, v: usize) -> (Vec<Vec<usize>>, Vec<usize>) {
    let mut f = split_network(g);
    let (s, t) = (2 * u + 1, 2 * v);
    f.max_flow(s, t, u32::MAX);
    let cut = split_cut(&f, s, g.n());
    (split_paths(&mut f, s, t), cut)
}

fn edge_network(g: &Graph) -> (Flow, Vec<(usize, usize)>) {
    let mut f = Flow::new(g.n() + 1);
    let pairs = g
        .edges()
        .iter()
        .map(|&(a, b)| (f.add(a, b, 1), f.add(b, a, 1)))
        .collect();
    (f, pairs)
}

/// Maximum number of edge-disjoint u–v paths with a minimum edge cut.
fn edge_flow(g: &Graph, u: usize, v: usize) -> (Vec<Vec<usize>>, Vec<(usize, usize)>) {
    let (mut f, pairs) = edge_network(g);
    f.max_flow(u, v, u32::MAX);
    let r = f.reachable(u);
    let cut = g
        .edges()
        .iter()
        .copied()
        .filter(|&(a, b)| r[a] != r[b])
        .collect();
    for &(a, b) in &pairs {
        f.cancel(a, b);
    }
    let paths = f.decompose(u, v).into_iter().map(loop_erase).collect();
    (paths, cut)
}

fn loop_erase(walk: Vec<usize>) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::new();
    for x in walk {
        if let Some(i) = out.iter().position(|&y| y == x) {
            out.truncate(i + 1);
        } else {
            out.push(x);
        }
    }
    out
}

fn kappa_by_flow(g: &Graph) -> (usize, Vec<usize>) {
    let n = g.n();
    if g.is_complete() {
        return (n.saturating_sub(1), (1..n).collect());
    }
    let mut best = (usize::MAX, Vec::new());
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                let (paths, cut) = vertex_flow(g, u, v);
                if paths.len() < best.0 {
                    best = (paths.len(), cut);
                }
            }
        }
    }
    best
}

fn lambda_by_flow(g: &Graph) -> (usize, Vec<(usize, usize)>) {
    if g.n() <= 1 {
        return (0, Vec::new());
    }
    let mut best = (usize::MAX, Vec::new());
    for v in 1..g.n() {
        let (paths, cut) = edge_flow(g, 0, v);
        if paths.len() < best.0 {
            best = (paths.len(), cut);
        }
    }
    best
}

/// Least |S| such that G − S is disconnected or a single vertex.
fn kappa_by_subsets(g: &Graph) -> usize {
    let n = g.n();
    for k in 0..n {
        for s in subsets(n, k) {
            let mask = s.iter().fold(0u64, |m, &v| m | 1 << v);
            if n - k <= 1 || g.components_without_mask(mask) > 1 {
                return k;
            }
        }
    }
    0
}

/// Least |∂(S)| over nonempty proper vertex sets S.
fn lambda_by_subsets(g: &Graph) -> usize {
    let n = g.n();
    if n <= 1 {
        return 0;
    }
    // fix vertex n-1 outside S
    (1u64..1 << (n - 1))
        .map(|mask| {
            g.edges()
                .iter()
                .filter(|&&(a, b)| (mask >> a & 1) != (mask >> b & 1))
                .count()
        })
        .min()
        .unwrap()
}

/// κ(G), λ(G) and δ(G) with minimum cuts; small graphs are checked twice.
pub fn connectivity_numbers(g: &Graph) -> Result<ConnectivityNumbers> {
    cap_check("order for connectivity flows", g.n(), FLOW_MAX_N)?;
    let (kappa, vertex_cut) = kappa_by_flow(g);
    let (lambda, edge_cut) = lambda_by_flow(g);
    let small = g.n() <= SUBSET_MAX_N;
    Ok(ConnectivityNumbers {
        kappa,
        lambda,
        delta: g.min_degree(),
        vertex_cut,
        edge_cut,
        kappa_by_subsets: small.then(|| kappa_by_subsets(g)),
        lambda_by_subsets: small.then(|| lambda_by_subsets(g)),
    })
}

/// Vertex connectivity alone, by flows.
pub fn kappa(g: &Graph) -> usize {
    kappa_by_flow(g).0
}

/// A graph with κ = a, λ = b and δ = c: two (c+1)-cliques U, W with
/// u_i w_i for i ≤ a and u_a w_j for a < j ≤ b.
pub fn chartrand_harary(a: usize, b: usize, c: usize) -> Result<Graph> {
    if !(0 < a && a <= b && b <= c) {
        return Err(Error::BadParams(format!("need 0 < a <= b <= c, got ({a}, {b}, {c})")));
    }
    let k = c + 1;
    let u = |i: usize| i - 1;
    let w = |j: usize| k + j - 1;
    let mut edges = Vec::new();
    for i in 1..=k {
        for j in i + 1..=k {
            edges.push((u(i), u(j)));
            edges.push((w(i), w(j)));
        }
    }
    edges.extend((1..=a).map(|i| (u(i), w(i))));
    edges.extend((a + 1..=b).map(|j| (u(a), w(j))));
    Ok(Graph::from_edges(2 * k, edges))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PathMode {
    Vertex,
    Edge,
    Fan,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DisjointPathSystem {
    pub mode: PathMode,
    pub source: usize,
    /// One target, or the set U for a fan.
    pub targets: Vec<usize>,
    pub paths: Vec<Vec<usize>>,
}

impl DisjointPathSystem {
    /// Each path is a simple path of `g` from the source to a target, and the
    /// paths are disjoint as the mode requires.
    pub fn verify(&self, g: &Graph) -> bool {
        let n = g.n();
        let simple = self.paths.iter().all(|p| {
            let mut seen = vec![false; n];
            p.len() >= 2
                && p[0] == self.source
                && self.targets.contains(p.last().unwrap())
                && p.windows(2).all(|w| g.has_edge(w[0], w[1]))
                && p.iter().all(|&x| !std::mem::replace(&mut seen[x], true))
        });
        if !simple {
            return false;
        }
        match self.mode {
            PathMode::Edge => {
                let mut used = vec![false; g.m()];
                self.paths.iter().all(|p| {
                    p.windows(2)
                        .all(|w| !std::mem::replace(&mut used[g.edge_id(w[0], w[1]).unwrap()], true))
                })
            }
            PathMode::Vertex | PathMode::Fan => {
                let mut used = vec![false; n];
                let fan = self.mode == PathMode::Fan;
                self.paths.iter().all(|p| {
                    let inner = if fan { &p[1..] } else { &p[1..p.len() - 1] };
                    let ends_once = !fan || inner[..inner.len() - 1].iter().all(|x| !self.targets.contains(x));
                    ends_once && inner.iter().all(|&x| !std::mem::replace(&mut used[x], true))
                })
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MengerResult {
    pub system: DisjointPathSystem,
    /// Separating vertex set (vertex and fan modes).
    pub vertex_cut: Vec<usize>,
    /// Separating edge set (edge mode).
    pub edge_cut: Vec<(usize, usize)>,
}

impl MengerResult {
    pub fn cut_size(&self) -> usize {
        match self.system.mode {
            PathMode::Edge => self.edge_cut.len(),
            _ => self.vertex_cut.len(),
        }
    }

    /// The cut really separates the source from every target.
    pub fn cut_separates(&self, g: &Graph) -> bool {
        let s = self.system.source;
        let (label, _) = match self.system.mode {
            PathMode::Edge => {
                let mut re = vec![false; g.m()];
                for &(a, b) in &self.edge_cut {
                    re[g.edge_id(a, b).unwrap()] = true;
                }
                g.component_labels_without(&vec![false; g.n()], Some(&re))
            }
            _ => {
                let mut rm = vec![false; g.n()];
                for &v in &self.vertex_cut {
                    rm[v] = true;
                }
                if rm[s] {
                    return false;
                }
                g.component_labels_without(&rm, None)
            }
        };
        self.system
            .targets
            .iter()
            .all(|&t| label[t] == usize::MAX || label[t] != label[s])
    }
}

fn check_vertex(g: &Graph, v: usize) -> Result<()> {
    if v < g.n() {
        Ok(())
    } else {
        Err(Error::OutOfRange { vertex: v, n: g.n() })
    }
}

/// Maximum disjoint u–v path system together with a cut of the same size.
pub fn menger(g: &Graph, u: usize, v: usize, mode: PathMode) -> Result<MengerResult> {
    check_vertex(g, u)?;
    check_vertex(g, v)?;
    if u == v {
        return Err(Error::BadParams("endpoints must differ".into()));
    }
    let (paths, vertex_cut, edge_cut) = match mode {
        PathMode::Vertex => {
            if g.has_edge(u, v) {
                return Err(Error::AdjacentEndpoints(u, v));
            }
            let (p, c) = vertex_flow(g, u, v);
            (p, c, Vec::new())
        }
        PathMode::Edge => {
            let (p, c) = edge_flow(g, u, v);
            (p, Vec::new(), c)
        }
        PathMode::Fan => return fan(g, u, &[v]),
    };
    let out = MengerResult {
        system: DisjointPathSystem {
            mode,
            source: u,
            targets: vec![v],
            paths,
        },
        vertex_cut,
        edge_cut,
    };
    assert_eq!(out.system.paths.len(), out.cut_size());
    Ok(out)
}

/// Maximum (x, U)-fan: paths from x sharing only x, each meeting U only at its end.
pub fn fan(g: &Graph, x: usize, targets: &[usize]) -> Result<MengerResult> {
    check_vertex(g, x)?;
    if targets.is_empty() {
        return Err(Error::EmptySet);
    }
    let n = g.n();
    let mut in_u = vec![false; n];
    for &t in targets {
        check_vertex(g, t)?;
        if t == x {
            return Err(Error::BadParams("fan root lies in the target set".into()));
        }
        in_u[t] = true;
    }
    // targets keep no outgoing graph arcs, so every path stops at its first target
    let big = n as u32 + 1;
    let sink = 2 * n;
    let mut f = Flow::new(2 * n + 1);
    for v in 0..n {
        f.add(2 * v, 2 * v + 1, 1);
        if in_u[v] {
            f.add(2 * v + 1, sink, 1);
        }
    }
    for &(a, b) in g.edges() {
        if !in_u[a] {
            f.add(2 * a + 1, 2 * b, big);
        }
        if !in_u[b] {
            f.add(2 * b + 1, 2 * a, big);
        }
    }
    let s = 2 * x + 1;
    f.max_flow(s, sink, u32::MAX);
    let vertex_cut = split_cut(&f, s, n);
    let mut t: Vec<usize> = targets.to_vec();
    t.sort_unstable();
    t.dedup();
    let out = MengerResult {
        system: DisjointPathSystem {
            mode: PathMode::Fan,
            source: x,
            targets: t,
            paths: split_paths(&mut f, s, sink),
        },
        vertex_cut,
        edge_cut: Vec::new(),
    };
    assert_eq!(out.system.paths.len(), out.cut_size());
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Ear {
    pub path: Vec<usize>,
    /// Both ends are the same vertex.
    pub closed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EarDecomposition {
    /// Initial cycle P_0 as a vertex sequence without the repeated end.
    pub cycle: Vec<usize>,
    pub ears: Vec<Ear>,
}

impl EarDecomposition {
    /// Every edge of `g` lies in exactly one part and each ear attaches correctly.
    pub fn verify(&self, g: &Graph, closed_allowed: bool) -> bool {
        let n = g.n();
        let mut used = vec![false; g.m()];
        let mut covered = vec![false; n];
        let take = |a: usize, b: usize, used: &mut Vec<bool>| match g.edge_id(a, b) {
            Some(e) => !std::mem::replace(&mut used[e], true),
            None => false,
        };
        let c = &self.cycle;
        if c.len() < 3 {
            return false;
        }
        for i in 0..c.len() {
            if covered[c[i]] || !take(c[i], c[(i + 1) % c.len()], &mut used) {
                return false;
            }
            covered[c[i]] = true;
        }
        for ear in &self.ears {
            let p = &ear.path;
            let (s, t) = (p[0], *p.last().unwrap());
            if p.len() < 2 || !covered[s] || !covered[t] || ear.closed != (s == t) {
                return false;
            }
            if ear.closed && !closed_allowed {
                return false;
            }
            if p[1..p.len() - 1].iter().any(|&x| covered[x]) {
                return false;
            }
            if !p.windows(2).all(|w| take(w[0], w[1], &mut used)) {
                return false;
            }
            for &x in p {
                covered[x] = true;
            }
        }
        used.iter().all(|&u| u) && covered.iter().all(|&c| c)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EarOutcome {
    Decomposition(EarDecomposition),
    TooSmall,
    Disconnected,
    CutVertex(usize),
    Bridge((usize, usize)),
}

/// Shortest path from `y` to some vertex of H, expanding only vertices outside H.
fn path_to_h(g: &Graph, in_h: &[bool], y: usize, banned_vertex: Option<usize>, banned_edge: (usize, usize)) -> Option<Vec<usize>> {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    seen[y] = true;
    let mut queue = VecDeque::from([y]);
    while let Some(a) = queue.pop_front() {
        for &b in g.neighbors(a) {
            if seen[b] || Some(b) == banned_vertex || (a.min(b), a.max(b)) == banned_edge {
                continue;
            }
            seen[b] = true;
            parent[b] = a;
            if in_h[b] {
                let mut p = vec![b];
                let mut z = b;
                while z != y {
                    z = parent[z];
                    p.push(z);
                }
                p.reverse();
                return Some(p);
            }
            queue.push_back(b);
        }
    }
    None
}

/// Open (`closed = false`) or closed ear decomposition grown from a cycle.
///
/// On failure the outcome names the obstacle: a cut vertex for the open
/// version, a bridge for the closed one.
pub fn ear_decomposition(g: &Graph, closed: bool) -> EarOutcome {
    let n = g.n();
    if n < 3 {
        return EarOutcome::TooSmall;
    }
    if !g.is_connected() {
        return EarOutcome::Disconnected;
    }
    let cuts = cut_structure(g);
    if closed {
        if let Some(&b) = cuts.bridges.first() {
            return EarOutcome::Bridge(b);
        }
    } else if let Some(&v) = cuts.cut_vertices.first() {
        return EarOutcome::CutVertex(v);
    }
    let m = g.m();
    let mut in_h = vec![false; n];
    let mut used = vec![false; m];
    let (a, b) = g.edges()[0];
    let back = path_to_h(g, &{
        let mut t = vec![false; n];
        t[a] = true;
        t
    }, b, None, (a, b))
    .expect("a bridgeless edge lies on a cycle");
    // the path runs b .. a and closes through the edge ab
    let cycle = back;
    let mark = |p: &[usize], used: &mut Vec<bool>, in_h: &mut Vec<bool>| {
        for w in p.windows(2) {
            used[g.edge_id(w[0], w[1]).unwrap()] = true;
        }
        for &x in p {
            in_h[x] = true;
        }
    };
    let mut closed_cycle = cycle.clone();
    closed_cycle.push(cycle[0]);
    mark(&closed_cycle, &mut used, &mut in_h);
    let mut ears = Vec::new();
    while let Some(e) = (0..m).find(|&e| {
        let (x, y) = g.edges()[e];
        !used[e] && (in_h[x] || in_h[y])
    }) {
        let (p, q) = g.edges()[e];
        let (x, y) = if in_h[p] { (p, q) } else { (q, p) };
        let path = if in_h[y] {
            vec![x, y]
        } else {
            let ban = if closed { None } else { Some(x) };
            let mut h = in_h.clone();
            if !closed {
                h[x] = false;
            }
            let rest = path_to_h(g, &h, y, ban, (p.min(q), p.max(q)))
                .expect("no cut vertex or bridge blocks the ear");
            std::iter::once(x).chain(rest).collect()
        };
        mark(&path, &mut used, &mut in_h);
        let is_closed = path[0] == *path.last().unwrap();
        ears.push(Ear {
            path,
            closed: is_closed,
        });
    }
    EarOutcome::Decomposition(EarDecomposition { cycle, ears })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwoConnectedReport {
    /// Connected with no cut vertex.
    pub no_cut_vertex: bool,
    /// Every two vertices are joined by two internally disjoint paths.
    pub two_disjoint_paths: bool,
    /// Every two vertices lie on a common simple cycle.
    pub vertices_share_cycle: bool,
    /// No isolated vertex, and every two edges lie on a common simple cycle.
    pub edges_share_cycle: bool,
}

impl TwoConnectedReport {
    pub fn all_equal(&self) -> bool {
        let v = [
            self.no_cut_vertex,
            self.two_disjoint_paths,
            self.vertices_share_cycle,
            self.edges_share_cycle,
        ];
        v.iter().all(|&x| x == v[0])
    }
}

/// All simple cycles as vertex lists, each found once from its least vertex.
pub fn simple_cycles(g: &Graph) -> Vec<Vec<usize>> {
    fn go(g: &Graph, path: &mut Vec<usize>, seen: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        let s = path[0];
        let x = *path.last().unwrap();
        for &w in g.neighbors(x) {
            if w == s && path.len() >= 3 && path[1] < x {
                out.push(path.clone());
            } else if w > s && !seen[w] {
                seen[w] = true;
                path.push(w);
                go(g, path, seen, out);
                path.pop();
                seen[w] = false;
            }
        }
    }
    let mut out = Vec::new();
    let mut seen = vec![false; g.n()];
    for s in 0..g.n() {
        seen[s] = true;
        go(g, &mut vec![s], &mut seen, &mut out);
        seen[s] = false;
    }
    out
}

/// Evaluates the four equivalent descriptions of 2-connectivity separately.
pub fn two_connected_checks(g: &Graph) -> Result<TwoConnectedReport> {
    let n = g.n();
    if n < 3 {
        return Err(Error::TooSmall(format!("need at least 3 vertices, got {n}")));
    }
    cap_check("order for cycle enumeration", n, CYCLE_CLAUSE_MAX_N)?;
    let no_cut_vertex = g.is_connected() && cut_structure_recompute(g).cut_vertices.is_empty();
    let two_disjoint_paths = (0..n).all(|u| {
        (u + 1..n).all(|v| {
            if g.has_edge(u, v) {
                1 + vertex_flow(&g.without_edge(u, v), u, v).0.len() >= 2
            } else {
                vertex_flow(g, u, v).0.len() >= 2
            }
        })
    });
    let m = g.m();
    let mut vpair = vec![vec![false; n]; n];
    let mut epair = vec![vec![false; m]; m];
    for c in simple_cycles(g) {
        for &a in &c {
            for &b in &c {
                vpair[a][b] = true;
            }
        }
        let ids: Vec<usize> = (0..c.len())
            .map(|i| g.edge_id(c[i], c[(i + 1) % c.len()]).unwrap())
            .collect();
        for &a in &ids {
            for &b in &ids {
                epair[a][b] = true;
            }
        }
    }
    let vertices_share_cycle = (0..n).all(|u| (u + 1..n).all(|v| vpair[u][v]));
    let edges_share_cycle = g.min_degree() >= 1 && epair.iter().all(|row| row.iter().all(|&x| x));
    Ok(TwoConnectedReport {
        no_cut_vertex,
        two_disjoint_paths,
        vertices_share_cycle,
        edges_share_cycle,
    })
}

/// An edge of a 3-connected graph on at least five vertices whose contraction
/// leaves a 3-connected graph; the contraction is checked before returning.
pub fn contractible_edge(g: &Graph) -> Result<(usize, usize)> {
    if g.n() < 5 {
        return Err(Error::TooSmall(format!("need at least 5 vertices, got {}", g.n())));
    }
    cap_check("order for connectivity flows", g.n(), FLOW_MAX_N)?;
    if kappa(g) < 3 {
        return Err(Error::NotThreeConnected);
    }
    g.edges()
        .iter()
        .copied()
        .find(|&(u, v)| kappa(&contract_edge(g, u, v).unwrap()) >= 3)
        .ok_or(Error::NotThreeConnected)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, complete_bipartite, cycle, path};

    #[test]
    fn both_cut_routes_agree() {
        for g in [path(5), cycle(6), complete_bipartite(2, 3)] {
            let (a, b) = (cut_structure_recompute(&g), cut_structure_lowpoint(&g));
            assert_eq!((a.cut_vertices, a.bridges), (b.cut_vertices, b.bridges));
        }
    }

    #[test]
    fn small_numbers() {
        let c = connectivity_numbers(&complete(4)).unwrap();
        assert_eq!((c.kappa, c.lambda, c.delta), (3, 3, 3));
        assert!(c.consistent());
        let c = connectivity_numbers(&path(4)).unwrap();
        assert_eq!((c.kappa, c.lambda), (1, 1));
    }

    #[test]
    fn menger_c4() {
        let r = menger(&cycle(4), 0, 2, PathMode::Vertex).unwrap();
        assert_eq!(r.system.paths.len(), 2);
        assert!(r.system.verify(&cycle(4)) && r.cut_separates(&cycle(4)));
    }

    #[test]
    fn ears_of_cycle() {
        match ear_decomposition(&cycle(5), false) {
            EarOutcome::Decomposition(d) => assert!(d.ears.is_empty() && d.verify(&cycle(5), false)),
            other => panic!("{other:?}"),
        }
    }
}
