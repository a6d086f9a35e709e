//! Vertex, edge and total colorings: greedy orders, exact solvers, the
//! five-color algorithm, Vizing's recoloring and the explicit schemes.

use crate::error::{cap_check, Error, Result};
use crate::graphcore::{bipartition, Bipartition, Graph};
use crate::matching::{clique_number, complete_one_factors, independence_number};
use crate::transform::complement;
use serde::Serialize;

/// Order cap for exact χ.
pub const CHI_MAX_N: usize = 40;
/// Edge cap for the exact edge-coloring search.
pub const EDGE_EXACT_MAX_M: usize = 40;
/// Element cap (vertices plus edges) for the exact total-coloring search.
pub const TOTAL_EXACT_MAX: usize = 40;
/// Largest doubled graph built by the König regularization.
pub const KONIG_MAX_VERTICES: usize = 1 << 16;

const NONE: usize = usize::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    Vertices,
    Edges,
    /// Vertices first, then edge j as element n + j.
    Total,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColorAssignment {
    pub target: Target,
    /// Color of each element, in 1..=k.
    pub colors: Vec<usize>,
    /// Largest color used.
    pub k: usize,
}

impl ColorAssignment {
    fn new(target: Target, colors: Vec<usize>) -> ColorAssignment {
        let k = colors.iter().copied().max().unwrap_or(0);
        ColorAssignment { target, colors, k }
    }

    /// Number of distinct colors.
    pub fn distinct(&self) -> usize {
        let mut c = self.colors.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    }
}

/// Standalone properness check for any target.
pub fn is_proper(g: &Graph, c: &ColorAssignment) -> bool {
    let (n, m) = (g.n(), g.m());
    let want = match c.target {
        Target::Vertices => n,
        Target::Edges => m,
        Target::Total => n + m,
    };
    if c.colors.len() != want || c.colors.iter().any(|&x| x == 0 || x > c.k) {
        return false;
    }
    let vc = |v: usize| c.colors[v];
    let ec = |e: usize| match c.target {
        Target::Edges => c.colors[e],
        _ => c.colors[n + e],
    };
    let vertices_ok = c.target == Target::Edges || g.edges().iter().all(|&(u, v)| vc(u) != vc(v));
    let edges_ok = c.target == Target::Vertices
        || (0..n).all(|v| {
            let mut seen: Vec<usize> = g.neighbors(v).iter().map(|&w| ec(g.edge_id(v, w).unwrap())).collect();
            let k = seen.len();
            seen.sort_unstable();
            seen.dedup();
            seen.len() == k && (c.target != Target::Total || !seen.contains(&vc(v)))
        });
    vertices_ok && edges_ok
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GreedyOrder {
    Given,
    WelshPowell,
    SmallestLast,
}

impl std::str::FromStr for GreedyOrder {
    type Err = Error;
    fn from_str(s: &str) -> Result<GreedyOrder> {
        match s {
            "given" => Ok(GreedyOrder::Given),
            "welsh_powell" => Ok(GreedyOrder::WelshPowell),
            "smallest_last" => Ok(GreedyOrder::SmallestLast),
            _ => Err(Error::BadParams(format!("unknown order {s:?}"))),
        }
    }
}

/// Colors vertices in `order`, each with the least color absent among its colored neighbours.
pub fn greedy_in_order(g: &Graph, order: &[usize]) -> Result<ColorAssignment> {
    let n = g.n();
    let mut seen = vec![false; n];
    if order.len() != n || order.iter().any(|&v| v >= n || std::mem::replace(&mut seen[v], true)) {
        return Err(Error::BadParams("order must list every vertex once".into()));
    }
    let mut color = vec![0usize; n];
    for &v in order {
        let mut used: Vec<usize> = g.neighbors(v).iter().map(|&w| color[w]).filter(|&c| c > 0).collect();
        used.sort_unstable();
        used.dedup();
        color[v] = (1..).find(|c| used.binary_search(c).is_err()).unwrap();
    }
    Ok(ColorAssignment::new(Target::Vertices, color))
}

/// Removal order that repeatedly takes a vertex of least remaining degree,
/// with the largest minimum degree met on the way.
pub fn smallest_last(g: &Graph) -> (Vec<usize>, usize) {
    let n = g.n();
    let mut deg = g.degrees();
    let mut gone = vec![false; n];
    let mut removal = Vec::with_capacity(n);
    let mut degeneracy = 0;
    for _ in 0..n {
        let v = (0..n).filter(|&v| !gone[v]).min_by_key(|&v| (deg[v], v)).unwrap();
        degeneracy = degeneracy.max(deg[v]);
        gone[v] = true;
        removal.push(v);
        for &w in g.neighbors(v) {
            if !gone[w] {
                deg[w] -= 1;
            }
        }
    }
    removal.reverse();
    (removal, degeneracy)
}

/// max over subgraphs H of δ(H).
pub fn degeneracy(g: &Graph) -> usize {
    smallest_last(g).1
}

/// Vertices by non-increasing degree, ties by index.
pub fn welsh_powell_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order
}

/// 1 + max_i min{d_i, i − 1} over degrees in non-increasing order.
pub fn welsh_powell_bound(g: &Graph) -> usize {
    let mut d = g.degrees();
    d.sort_unstable_by(|a, b| b.cmp(a));
    1 + d.iter().enumerate().map(|(i, &di)| di.min(i)).max().unwrap_or(0)
}

pub fn greedy_color(g: &Graph, order: GreedyOrder, given: Option<&[usize]>) -> Result<ColorAssignment> {
    match order {
        GreedyOrder::Given => {
            let id: Vec<usize> = (0..g.n()).collect();
            greedy_in_order(g, given.unwrap_or(&id))
        }
        GreedyOrder::WelshPowell => greedy_in_order(g, &welsh_powell_order(g)),
        GreedyOrder::SmallestLast => greedy_in_order(g, &smallest_last(g).0),
    }
}

/// DSATUR branch and bound over vertices with color-count saturation.
fn exact_vertex_coloring(g: &Graph, lower: usize) -> Vec<usize> {
    let n = g.n();
    let init = greedy_in_order(g, &smallest_last(g).0).unwrap();
    let mut best = init.colors.clone();
    let mut best_k = init.k;
    if best_k <= lower {
        return best;
    }
    struct State {
        color: Vec<usize>,
        cnt: Vec<Vec<u16>>,
        sat: Vec<usize>,
    }
    let mut st = State {
        color: vec![0; n],
        cnt: vec![vec![0; n + 2]; n],
        sat: vec![0; n],
    };
    fn go(g: &Graph, st: &mut State, depth: usize, used: usize, best: &mut Vec<usize>, best_k: &mut usize, lower: usize) -> bool {
        if used >= *best_k {
            return false;
        }
        if depth == g.n() {
            *best = st.color.clone();
            *best_k = used;
            return used <= lower;
        }
        let v = (0..g.n())
            .filter(|&v| st.color[v] == 0)
            .max_by_key(|&v| (st.sat[v], g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        for c in 1..=(used + 1).min(*best_k - 1) {
            if st.cnt[v][c] > 0 {
                continue;
            }
            st.color[v] = c;
            for &w in g.neighbors(v) {
                if st.cnt[w][c] == 0 {
                    st.sat[w] += 1;
                }
                st.cnt[w][c] += 1;
            }
            let done = go(g, st, depth + 1, used.max(c), best, best_k, lower);
            for &w in g.neighbors(v) {
                st.cnt[w][c] -= 1;
                if st.cnt[w][c] == 0 {
                    st.sat[w] -= 1;
                }
            }
            st.color[v] = 0;
            if done {
                return true;
            }
        }
        false
    }
    go(g, &mut st, 0, 0, &mut best, &mut best_k, lower);
    best
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChromaticReport {
    pub chi: usize,
    pub coloring: ColorAssignment,
    pub omega: Option<usize>,
    pub alpha: Option<usize>,
    pub max_degree: usize,
    /// Connected, not complete and not an odd cycle.
    pub brooks_applies: bool,
}

impl ChromaticReport {
    /// ω ≤ χ ≤ Δ + 1, n/α ≤ χ ≤ n − α + 1, and χ ≤ Δ where Brooks applies.
    pub fn bounds_hold(&self, n: usize) -> bool {
        let chi = self.chi;
        self.omega.is_none_or(|w| w <= chi)
            && chi <= self.max_degree + 1
            && self.alpha.is_none_or(|a| n == 0 || (n <= chi * a && chi + a <= n + 1))
            && (!self.brooks_applies || chi <= self.max_degree)
    }
}

fn is_odd_cycle(g: &Graph) -> bool {
    g.n() % 2 == 1 && g.n() >= 3 && g.is_connected() && g.degrees().iter().all(|&d| d == 2)
}

/// Exact χ with a minimum coloring.
pub fn chromatic_number(g: &Graph) -> Result<ChromaticReport> {
    let n = g.n();
    cap_check("order for exact coloring", n, CHI_MAX_N)?;
    let omega = clique_number(g).ok();
    let colors = if n == 0 {
        Vec::new()
    } else {
        exact_vertex_coloring(g, omega.unwrap_or(1))
    };
    let coloring = ColorAssignment::new(Target::Vertices, colors);
    Ok(ChromaticReport {
        chi: coloring.k,
        coloring,
        omega,
        alpha: independence_number(g).ok(),
        max_degree: g.max_degree(),
        brooks_applies: g.is_connected() && n > 0 && !g.is_complete() && !is_odd_cycle(g),
    })
}

/// Removes a vertex of degree at most five at a time, then colors in reverse,
/// freeing a color at a saturated degree-5 vertex by a Kempe swap. With
/// `verify` the input is first checked for planarity.
pub fn five_color_planar(g: &Graph, verify: bool) -> Result<ColorAssignment> {
    let n = g.n();
    if verify && !crate::planar::is_planar(g) {
        return Err(Error::NotPlanar);
    }
    let mut deg = g.degrees();
    let mut gone = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n).filter(|&v| !gone[v]).min_by_key(|&v| (deg[v], v)).unwrap();
        if deg[v] > 5 {
            return Err(Error::NotPlanar);
        }
        gone[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !gone[w] {
                deg[w] -= 1;
            }
        }
    }
    let mut color = vec![0usize; n];
    for &v in order.iter().rev() {
        let used = |color: &[usize]| {
            let mut u = [false; 6];
            for &w in g.neighbors(v) {
                u[color[w]] = true;
            }
            u
        };
        let u = used(&color);
        if let Some(c) = (1..=5).find(|&c| !u[c]) {
            color[v] = c;
            continue;
        }
        let nbrs: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| color[w] > 0).collect();
        let mut freed = None;
        'pairs: for a in 0..nbrs.len() {
            for b in a + 1..nbrs.len() {
                let (x, y) = (nbrs[a], nbrs[b]);
                let (i, j) = (color[x], color[y]);
                if i == j {
                    continue;
                }
                let comp = kempe_vertices(g, &color, x, i, j);
                if !comp[y] {
                    for w in 0..n {
                        if comp[w] {
                            color[w] = if color[w] == i { j } else { i };
                        }
                    }
                    freed = Some(i);
                    break 'pairs;
                }
            }
        }
        match freed {
            Some(c) => color[v] = c,
            None => return Err(Error::SwapExhausted(v)),
        }
    }
    Ok(ColorAssignment::new(Target::Vertices, color))
}

/// Vertices of the {i, j}-colored component containing `x`.
fn kempe_vertices(g: &Graph, color: &[usize], x: usize, i: usize, j: usize) -> Vec<bool> {
    let mut comp = vec![false; g.n()];
    comp[x] = true;
    let mut stack = vec![x];
    while let Some(a) = stack.pop() {
        for &b in g.neighbors(a) {
            if !comp[b] && (color[b] == i || color[b] == j) {
                comp[b] = true;
                stack.push(b);
            }
        }
    }
    comp
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeScheme {
    KonigBipartite,
    KonigRegularized,
    CompleteRotation,
    Vizing,
}

impl std::str::FromStr for EdgeScheme {
    type Err = Error;
    fn from_str(s: &str) -> Result<EdgeScheme> {
        match s {
            "konig" | "konig_bipartite" => Ok(EdgeScheme::KonigBipartite),
            "konig_regularized" => Ok(EdgeScheme::KonigRegularized),
            "rotation" | "complete_rotation" => Ok(EdgeScheme::CompleteRotation),
            "vizing" => Ok(EdgeScheme::Vizing),
            _ => Err(Error::BadParams(format!("unknown edge scheme {s:?}"))),
        }
    }
}

/// How often each case of the insertion step occurred.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct VizingTrace {
    /// a and b already miss a common color.
    pub common: usize,
    /// The fan ends at a color missing at a.
    pub fan_end: usize,
    /// The fan returns to the color missing at b; swap at a, or at v_k.
    pub back_to_b_swap_a: usize,
    pub back_to_b_swap_vk: usize,
    /// The fan repeats an earlier color; swap at a, or at v_k.
    pub repeat_swap_a: usize,
    pub repeat_swap_vk: usize,
}

struct EdgeState<'a> {
    g: &'a Graph,
    /// at[v][c] = neighbour joined to v by an edge of color c.
    at: Vec<Vec<usize>>,
    k: usize,
}

impl<'a> EdgeState<'a> {
    fn missing(&self, v: usize) -> usize {
        (1..=self.k).find(|&c| self.at[v][c] == NONE).expect("a vertex of degree ≤ Δ misses a color")
    }

    fn set(&mut self, u: usize, v: usize, c: usize) {
        self.at[u][c] = v;
        self.at[v][c] = u;
    }

    fn clear(&mut self, u: usize, v: usize, c: usize) {
        self.at[u][c] = NONE;
        self.at[v][c] = NONE;
    }

    fn color_of(&self, u: usize, v: usize) -> usize {
        (1..=self.k).find(|&c| self.at[u][c] == v).unwrap()
    }

    /// Vertices of the {c1, c2}-edge path through `x`.
    fn kempe(&self, x: usize, c1: usize, c2: usize) -> Vec<usize> {
        let mut comp = vec![x];
        let mut seen = vec![false; self.g.n()];
        seen[x] = true;
        let mut i = 0;
        while i < comp.len() {
            let a = comp[i];
            for c in [c1, c2] {
                let b = self.at[a][c];
                if b != NONE && !seen[b] {
                    seen[b] = true;
                    comp.push(b);
                }
            }
            i += 1;
        }
        comp
    }

    fn swap(&mut self, comp: &[usize], c1: usize, c2: usize) {
        let mut edges = Vec::new();
        for &a in comp {
            for c in [c1, c2] {
                let b = self.at[a][c];
                if b != NONE && a < b {
                    edges.push((a, b, c));
                }
            }
        }
        for &(a, b, c) in &edges {
            self.clear(a, b, c);
        }
        for &(a, b, c) in &edges {
            self.set(a, b, if c == c1 { c2 } else { c1 });
        }
    }

    /// Recolors a v_j with S_j for j = k down to 1.
    fn shift(&mut self, a: usize, fan: &[usize], cols: &[usize]) {
        for j in (0..fan.len()).rev() {
            let old = self.color_of(a, fan[j]);
            self.clear(a, fan[j], old);
            self.set(a, fan[j], cols[j]);
        }
    }

    fn insert(&mut self, a: usize, b: usize, trace: &mut VizingTrace) {
        if let Some(c) = (1..=self.k).find(|&c| self.at[a][c] == NONE && self.at[b][c] == NONE) {
            trace.common += 1;
            self.set(a, b, c);
            return;
        }
        let s = self.missing(b);
        let t = self.missing(a);
        let mut fan: Vec<usize> = Vec::new();
        let mut cols: Vec<usize> = Vec::new();
        let mut prev = s;
        loop {
            let v = self.at[a][prev];
            if v == NONE {
                trace.fan_end += 1;
                self.shift(a, &fan, &cols);
                break;
            }
            let sv = self.missing(v);
            if sv == s {
                fan.push(v);
                cols.push(sv);
                let comp = self.kempe(a, s, t);
                if !comp.contains(&b) {
                    trace.back_to_b_swap_a += 1;
                    self.swap(&comp, s, t);
                } else {
                    trace.back_to_b_swap_vk += 1;
                    let comp = self.kempe(v, s, t);
                    self.swap(&comp, s, t);
                    *cols.last_mut().unwrap() = t;
                    self.shift(a, &fan, &cols);
                }
                break;
            }
            if let Some(i) = cols.iter().position(|&c| c == sv) {
                fan.push(v);
                cols.push(sv);
                let vi = fan[i];
                let comp = self.kempe(a, sv, t);
                if !comp.contains(&vi) {
                    trace.repeat_swap_a += 1;
                    self.swap(&comp, sv, t);
                    self.shift(a, &fan[..=i], &cols[..=i]);
                } else {
                    trace.repeat_swap_vk += 1;
                    let comp = self.kempe(v, sv, t);
                    self.swap(&comp, sv, t);
                    *cols.last_mut().unwrap() = t;
                    self.shift(a, &fan, &cols);
                }
                break;
            }
            fan.push(v);
            cols.push(sv);
            prev = sv;
        }
        debug_assert!(self.at[a][s] == NONE && self.at[b][s] == NONE);
        self.set(a, b, s);
    }
}

/// (Δ + 1)-edge-coloring by inserting edges in id order.
pub fn vizing(g: &Graph) -> (ColorAssignment, VizingTrace) {
    let k = g.max_degree() + 1;
    let mut st = EdgeState {
        g,
        at: vec![vec![NONE; k + 1]; g.n()],
        k,
    };
    let mut trace = VizingTrace::default();
    for &(a, b) in g.edges() {
        st.insert(a, b, &mut trace);
    }
    let colors = g.edges().iter().map(|&(a, b)| st.color_of(a, b)).collect();
    (ColorAssignment::new(Target::Edges, colors), trace)
}

/// Δ-edge-coloring of a bipartite graph. Each edge uv takes a color a missing
/// at u; if a is used at v, the a/b path from v (b missing at v) is swapped,
/// which cannot reach u in a bipartite graph.
pub fn konig_edge_coloring(g: &Graph) -> Result<ColorAssignment> {
    if !bipartition(g).is_bipartite() {
        return Err(Error::WrongClass("graph is not bipartite".into()));
    }
    let k = g.max_degree();
    let mut st = EdgeState {
        g,
        at: vec![vec![NONE; k + 1]; g.n()],
        k,
    };
    for &(u, v) in g.edges() {
        let a = st.missing(u);
        if st.at[v][a] != NONE {
            let b = st.missing(v);
            let path = st.kempe(v, a, b);
            debug_assert!(!path.contains(&u));
            st.swap(&path, a, b);
        }
        st.set(u, v, a);
    }
    let colors = g.edges().iter().map(|&(a, b)| st.color_of(a, b)).collect();
    Ok(ColorAssignment::new(Target::Edges, colors))
}

/// Δ-edge-coloring of a bipartite graph: double until Δ-regular, then peel
/// perfect matchings. The doubled graph grows as 2^(Δ−δ)·n.
pub fn konig_regularized(g: &Graph) -> Result<ColorAssignment> {
    let Bipartition::Parts { v1, .. } = bipartition(g) else {
        return Err(Error::WrongClass("graph is not bipartite".into()));
    };
    let delta = g.max_degree();
    if delta == 0 {
        return Ok(ColorAssignment::new(Target::Edges, Vec::new()));
    }
    let mut h = g.clone();
    let mut left = v1;
    while h.min_degree() < delta {
        let n = h.n();
        if 2 * n > KONIG_MAX_VERTICES {
            return Err(Error::CapExceeded {
                what: "vertices in the regularized bipartite graph",
                cap: KONIG_MAX_VERTICES,
            });
        }
        let low: Vec<usize> = (0..n).filter(|&v| h.degree(v) < delta).collect();
        let edges = h
            .edges()
            .iter()
            .copied()
            .chain(h.edges().iter().map(|&(u, v)| (u + n, v + n)))
            .chain(low.iter().map(|&v| (v, v + n)));
        // the second copy has its sides swapped so the rungs cross
        let mut is_left = vec![false; 2 * n];
        for &v in &left {
            is_left[v] = true;
        }
        for v in 0..n {
            is_left[n + v] = !is_left[v];
        }
        left = (0..2 * n).filter(|&v| is_left[v]).collect();
        h = Graph::from_edges(2 * n, edges);
    }
    let parts = crate::matching::peel_matchings(&h, &left, delta)?;
    let mut colors = vec![0; g.m()];
    for (c, part) in parts.iter().enumerate() {
        for &(u, v) in part {
            if v < g.n() {
                colors[g.edge_id(u, v).unwrap()] = c + 1;
            }
        }
    }
    Ok(ColorAssignment::new(Target::Edges, colors))
}

/// Rotation classes of K_n: n − 1 colors for even n, n for odd n.
pub fn complete_edge_coloring(g: &Graph) -> Result<ColorAssignment> {
    let n = g.n();
    if !g.is_complete() {
        return Err(Error::WrongClass("graph is not complete".into()));
    }
    if n < 2 {
        return Ok(ColorAssignment::new(Target::Edges, Vec::new()));
    }
    let mut colors = vec![0; g.m()];
    if n.is_multiple_of(2) {
        for (c, part) in complete_one_factors(n)?.iter().enumerate() {
            for &(u, v) in part {
                colors[g.edge_id(u, v).unwrap()] = c + 1;
            }
        }
    } else {
        // K_n sits in K_{n+1} as the vertices other than the centre v_0
        for (c, part) in complete_one_factors(n + 1)?.iter().enumerate() {
            for &(u, v) in part {
                if u > 0 {
                    colors[g.edge_id(u - 1, v - 1).unwrap()] = c + 1;
                }
            }
        }
    }
    Ok(ColorAssignment::new(Target::Edges, colors))
}

pub fn edge_color(g: &Graph, scheme: EdgeScheme) -> Result<ColorAssignment> {
    match scheme {
        EdgeScheme::KonigBipartite => konig_edge_coloring(g),
        EdgeScheme::KonigRegularized => konig_regularized(g),
        EdgeScheme::CompleteRotation => complete_edge_coloring(g),
        EdgeScheme::Vizing => Ok(vizing(g).0),
    }
}

/// Proper edge coloring with at most `k` colors by backtracking in edge order.
fn edge_coloring_search(g: &Graph, k: usize) -> Option<Vec<usize>> {
    let es = g.edges();
    let mut at = vec![vec![false; k + 1]; g.n()];
    let mut colors = vec![0; es.len()];
    fn go(i: usize, es: &[(usize, usize)], k: usize, at: &mut [Vec<bool>], colors: &mut [usize], used: usize) -> bool {
        if i == es.len() {
            return true;
        }
        let (u, v) = es[i];
        for c in 1..=k.min(used + 1) {
            if at[u][c] || at[v][c] {
                continue;
            }
            at[u][c] = true;
            at[v][c] = true;
            colors[i] = c;
            if go(i + 1, es, k, at, colors, used.max(c)) {
                return true;
            }
            at[u][c] = false;
            at[v][c] = false;
        }
        false
    }
    go(0, es, k, &mut at, &mut colors, 0).then_some(colors)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChromaticIndex {
    pub chi_prime: usize,
    /// 1 when χ′ = Δ, 2 when χ′ = Δ + 1.
    pub class: u8,
    /// m > ⌊n/2⌋ · Δ.
    pub overfull: bool,
    pub coloring: ColorAssignment,
}

pub fn is_overfull(g: &Graph) -> bool {
    g.m() > (g.n() / 2) * g.max_degree()
}

/// χ′ by searching for a Δ-coloring; otherwise Vizing's coloring attains Δ + 1.
/// An overfull graph skips the search: each color class has at most ⌊n/2⌋ edges.
pub fn chromatic_index(g: &Graph) -> Result<ChromaticIndex> {
    let delta = g.max_degree();
    let overfull = is_overfull(g);
    if !overfull {
        cap_check("edges for exact edge coloring", g.m(), EDGE_EXACT_MAX_M)?;
    }
    let found = if overfull { None } else { edge_coloring_search(g, delta) };
    let (chi_prime, coloring) = match found {
        Some(c) => (delta, ColorAssignment::new(Target::Edges, c)),
        None => (delta + 1, vizing(g).0),
    };
    Ok(ChromaticIndex {
        chi_prime,
        class: if chi_prime == delta { 1 } else { 2 },
        overfull,
        coloring,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TotalScheme {
    Exact,
    BipartitePlus2,
    Complete,
    CompleteBipartite,
}

impl std::str::FromStr for TotalScheme {
    type Err = Error;
    fn from_str(s: &str) -> Result<TotalScheme> {
        match s {
            "exact" => Ok(TotalScheme::Exact),
            "bipartite_plus2" => Ok(TotalScheme::BipartitePlus2),
            "complete" => Ok(TotalScheme::Complete),
            "complete_bipartite" => Ok(TotalScheme::CompleteBipartite),
            _ => Err(Error::BadParams(format!("unknown total scheme {s:?}"))),
        }
    }
}

/// Minimum total coloring by backtracking over vertices then edges.
fn total_coloring_search(g: &Graph) -> Vec<usize> {
    let (n, m) = (g.n(), g.m());
    let es = g.edges();
    // conflicts[x] lists earlier elements that must differ from x
    let mut conflicts: Vec<Vec<usize>> = vec![Vec::new(); n + m];
    for &(u, v) in es {
        conflicts[u.max(v)].push(u.min(v));
    }
    for (j, &(u, v)) in es.iter().enumerate() {
        conflicts[n + j].push(u);
        conflicts[n + j].push(v);
        for (i, &(a, b)) in es[..j].iter().enumerate() {
            if a == u || a == v || b == u || b == v {
                conflicts[n + j].push(n + i);
            }
        }
    }
    fn go(x: usize, k: usize, conflicts: &[Vec<usize>], colors: &mut [usize], used: usize) -> bool {
        if x == colors.len() {
            return true;
        }
        for c in 1..=k.min(used + 1) {
            if conflicts[x].iter().any(|&y| colors[y] == c) {
                continue;
            }
            colors[x] = c;
            if go(x + 1, k, conflicts, colors, used.max(c)) {
                return true;
            }
        }
        colors[x] = 0;
        false
    }
    let mut k = if n == 0 { 0 } else { g.max_degree() + 1 };
    loop {
        let mut colors = vec![0; n + m];
        if go(0, k, &conflicts, &mut colors, 0) {
            return colors;
        }
        k += 1;
    }
}

/// Vertices of V1 get Δ + 1, of V2 get Δ + 2, edges keep a König Δ-coloring.
fn total_bipartite_plus2(g: &Graph) -> Result<Vec<usize>> {
    let Bipartition::Parts { v1, .. } = bipartition(g) else {
        return Err(Error::WrongClass("graph is not bipartite".into()));
    };
    let d = g.max_degree();
    let edges = konig_edge_coloring(g)?;
    let mut colors = vec![d + 2; g.n()];
    for v in v1 {
        colors[v] = d + 1;
    }
    colors.extend(edges.colors);
    Ok(colors)
}

/// K_n, n odd: rotation n-edge-coloring, each vertex taking its missing color.
/// n even: restriction of the K_{n+1} coloring.
fn total_complete(g: &Graph) -> Result<Vec<usize>> {
    if !g.is_complete() {
        return Err(Error::WrongClass("graph is not complete".into()));
    }
    let n = g.n();
    let odd = if n % 2 == 1 { n } else { n + 1 };
    let big = crate::families::complete(odd);
    let edges = complete_edge_coloring(&big)?;
    let mut missing = vec![0; odd];
    for (v, miss) in missing.iter_mut().enumerate() {
        let used: Vec<usize> = big.neighbors(v).iter().map(|&w| edges.colors[big.edge_id(v, w).unwrap()]).collect();
        *miss = (1..=odd).find(|c| !used.contains(c)).unwrap();
    }
    let mut colors: Vec<usize> = missing[..n].to_vec();
    colors.extend(g.edges().iter().map(|&(u, v)| edges.colors[big.edge_id(u, v).unwrap()]));
    Ok(colors)
}

/// K_{m,n} with m < n: α(u_i v_j) = (i + j − 1) mod n, or n when i + j = n + 1;
/// u_i gets n + 1 and v_j a color missing at it. Equal sides use Δ + 2.
fn total_complete_bipartite(g: &Graph) -> Result<Vec<usize>> {
    let Bipartition::Parts { v1, v2 } = bipartition(g) else {
        return Err(Error::WrongClass("graph is not bipartite".into()));
    };
    if g.m() != v1.len() * v2.len() || g.n() < 2 {
        return Err(Error::WrongClass("graph is not complete bipartite".into()));
    }
    if v1.len() == v2.len() {
        return total_bipartite_plus2(g);
    }
    let (us, vs) = if v1.len() < v2.len() { (v1, v2) } else { (v2, v1) };
    let big = vs.len();
    let mut colors = vec![0; g.n() + g.m()];
    for (i0, &u) in us.iter().enumerate() {
        for (j0, &v) in vs.iter().enumerate() {
            let (i, j) = (i0 + 1, j0 + 1);
            let c = if i + j == big + 1 { big } else { (i + j - 1) % big };
            colors[g.n() + g.edge_id(u, v).unwrap()] = c;
        }
    }
    for &u in &us {
        colors[u] = big + 1;
    }
    for &v in &vs {
        let used: Vec<usize> = g.neighbors(v).iter().map(|&u| colors[g.n() + g.edge_id(u, v).unwrap()]).collect();
        colors[v] = (1..=big).find(|c| !used.contains(c)).unwrap();
    }
    Ok(colors)
}

pub fn total_color(g: &Graph, scheme: TotalScheme) -> Result<ColorAssignment> {
    let colors = match scheme {
        TotalScheme::Exact => {
            cap_check("elements for exact total coloring", g.n() + g.m(), TOTAL_EXACT_MAX)?;
            total_coloring_search(g)
        }
        TotalScheme::BipartitePlus2 => total_bipartite_plus2(g)?,
        TotalScheme::Complete => total_complete(g)?,
        TotalScheme::CompleteBipartite => total_complete_bipartite(g)?,
    };
    Ok(ColorAssignment::new(Target::Total, colors))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NordhausGaddum {
    pub n: usize,
    pub chi: usize,
    pub chi_complement: usize,
    /// 2√n ≤ χ + χ̄.
    pub sum_lower: bool,
    /// χ + χ̄ ≤ n + 1.
    pub sum_upper: bool,
    /// n ≤ χ · χ̄.
    pub product_lower: bool,
    /// χ · χ̄ ≤ ((n + 1)/2)².
    pub product_upper: bool,
}

impl NordhausGaddum {
    pub fn all_hold(&self) -> bool {
        self.sum_lower && self.sum_upper && self.product_lower && self.product_upper
    }
}

pub fn nordhaus_gaddum_check(g: &Graph) -> Result<NordhausGaddum> {
    let n = g.n();
    let a = chromatic_number(g)?.chi;
    let b = chromatic_number(&complement(g))?.chi;
    let (s, p) = (a + b, a * b);
    Ok(NordhausGaddum {
        n,
        chi: a,
        chi_complement: b,
        sum_lower: s * s >= 4 * n,
        sum_upper: s <= n + 1,
        product_lower: n <= p,
        product_upper: 4 * p <= (n + 1) * (n + 1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, complete_bipartite, cycle, petersen};

    #[test]
    fn small_chi() {
        assert_eq!(chromatic_number(&cycle(5)).unwrap().chi, 3);
        assert_eq!(chromatic_number(&cycle(4)).unwrap().chi, 2);
        assert_eq!(chromatic_number(&complete(5)).unwrap().chi, 5);
    }

    #[test]
    fn vizing_petersen() {
        let (c, _) = vizing(&petersen());
        assert!(is_proper(&petersen(), &c) && c.k <= 4);
        assert_eq!(chromatic_index(&petersen()).unwrap().chi_prime, 4);
    }

    #[test]
    fn schemes() {
        let k4 = complete(4);
        let c = complete_edge_coloring(&k4).unwrap();
        assert!(is_proper(&k4, &c) && c.k == 3);
        let k34 = complete_bipartite(3, 4);
        let t = total_color(&k34, TotalScheme::CompleteBipartite).unwrap();
        assert!(is_proper(&k34, &t) && t.k == 5);
        for kb in [konig_edge_coloring(&complete_bipartite(2, 3)), konig_regularized(&complete_bipartite(2, 3))] {
            let kb = kb.unwrap();
            assert!(is_proper(&complete_bipartite(2, 3), &kb) && kb.k == 3);
        }
    }
}
