//! Independence and cover numbers, matchings with certificates, factors.

use crate::error::{cap_check, Error, Result};
use crate::graphcore::{bipartition, subsets, Bipartition, Graph};
use crate::Rational;
use serde::Serialize;
use std::collections::VecDeque;

/// Order cap for the bitmask matching search.
pub const SEARCH_MAX_N: usize = 18;
/// Order cap for α, β, ω and β′ by exact search.
pub const OPT_MAX_N: usize = 20;
/// Order cap for the Tutte–Berge subset maximum.
pub const TUTTE_MAX_N: usize = 16;
/// Up to this size Dilworth is solved by brute force.
pub const DILWORTH_BRUTE_MAX: usize = 10;
/// Order cap for the Nash-Williams subset maximum and forest search.
pub const ARBORICITY_MAX_N: usize = 12;

const NONE: usize = usize::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Matching {
    pub edges: Vec<(usize, usize)>,
    pub saturated: Vec<usize>,
}

impl Matching {
    fn from_mate(mate: &[usize]) -> Matching {
        let edges = (0..mate.len())
            .filter(|&v| mate[v] != NONE && v < mate[v])
            .map(|v| (v, mate[v]))
            .collect();
        Matching {
            edges,
            saturated: (0..mate.len()).filter(|&v| mate[v] != NONE).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn is_perfect(&self, n: usize) -> bool {
        self.saturated.len() == n
    }
}

/// Edges of `g`, pairwise without a common end.
pub fn is_matching(g: &Graph, edges: &[(usize, usize)]) -> bool {
    let mut used = vec![false; g.n()];
    edges.iter().all(|&(u, v)| {
        g.has_edge(u, v) && !std::mem::replace(&mut used[u], true) && !std::mem::replace(&mut used[v], true)
    })
}

fn kuhn_try(g: &Graph, x: usize, mate: &mut [usize], seen: &mut [bool]) -> bool {
    for &y in g.neighbors(x) {
        if seen[y] {
            continue;
        }
        seen[y] = true;
        if mate[y] == NONE || kuhn_try(g, mate[y], mate, seen) {
            mate[y] = x;
            mate[x] = y;
            return true;
        }
    }
    false
}

/// Augmenting-path matching from the `left` side, in the given order.
fn kuhn(g: &Graph, left: &[usize]) -> Vec<usize> {
    let mut mate = vec![NONE; g.n()];
    for &x in left {
        let mut seen = vec![false; g.n()];
        kuhn_try(g, x, &mut mate, &mut seen);
    }
    mate
}

/// Vertices reachable from `starts` by alternating paths that leave the left
/// side on non-matching edges and the right side on matching edges.
fn alternating_reach(g: &Graph, starts: &[usize], mate: &[usize], is_left: &[bool]) -> Vec<bool> {
    let mut z = vec![false; g.n()];
    let mut queue: VecDeque<usize> = starts.iter().copied().collect();
    for &s in starts {
        z[s] = true;
    }
    while let Some(x) = queue.pop_front() {
        if is_left[x] {
            for &y in g.neighbors(x) {
                if mate[x] != y && !z[y] {
                    z[y] = true;
                    queue.push_back(y);
                }
            }
        } else if mate[x] != NONE && !z[mate[x]] {
            z[mate[x]] = true;
            queue.push_back(mate[x]);
        }
    }
    z
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BipartiteMatching {
    pub matching: Matching,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    /// Minimum vertex cover with as many vertices as the matching has edges.
    pub cover: Vec<usize>,
    /// S ⊆ left with |N(S)| < |S|, when the left side is not saturated.
    pub hall_violator: Option<Vec<usize>>,
}

/// Maximum matching of a bipartite graph with a König cover and a Hall set.
///
/// Without `left` the sides come from a 2-coloring; with it every edge must cross.
pub fn bipartite_matching(g: &Graph, left: Option<&[usize]>) -> Result<BipartiteMatching> {
    let n = g.n();
    let left: Vec<usize> = match left {
        Some(l) => {
            let mut l = l.to_vec();
            l.sort_unstable();
            l.dedup();
            if let Some(&v) = l.iter().find(|&&v| v >= n) {
                return Err(Error::OutOfRange { vertex: v, n });
            }
            l
        }
        None => match bipartition(g) {
            Bipartition::Parts { v1, .. } => v1,
            Bipartition::OddCycle(_) => return Err(Error::WrongClass("graph is not bipartite".into())),
        },
    };
    let mut is_left = vec![false; n];
    for &v in &left {
        is_left[v] = true;
    }
    if g.edges().iter().any(|&(u, v)| is_left[u] == is_left[v]) {
        return Err(Error::WrongClass("an edge lies inside one side".into()));
    }
    let right: Vec<usize> = (0..n).filter(|&v| !is_left[v]).collect();
    let mate = kuhn(g, &left);
    let exposed: Vec<usize> = left.iter().copied().filter(|&x| mate[x] == NONE).collect();
    let z = alternating_reach(g, &exposed, &mate, &is_left);
    let cover = (0..n).filter(|&v| is_left[v] != z[v]).collect();
    let hall_violator = exposed.first().map(|&x| {
        let zx = alternating_reach(g, &[x], &mate, &is_left);
        left.iter().copied().filter(|&v| zx[v]).collect()
    });
    Ok(BipartiteMatching {
        matching: Matching::from_mate(&mate),
        left,
        right,
        cover,
        hall_violator,
    })
}

/// Edmonds' blossom search for an augmenting path from `root`.
struct Blossom<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
}

impl<'a> Blossom<'a> {
    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn find_path(&mut self, root: usize) -> usize {
        let n = self.g.n();
        self.used = vec![false; n];
        self.parent = vec![NONE; n];
        self.base = (0..n).collect();
        self.used[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom = vec![false; n];
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return to;
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    queue.push_back(next);
                }
            }
        }
        NONE
    }
}

fn blossom_mate(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut b = Blossom {
        g,
        mate: vec![NONE; n],
        parent: vec![NONE; n],
        base: (0..n).collect(),
        used: vec![false; n],
        in_blossom: vec![false; n],
    };
    for root in 0..n {
        if b.mate[root] != NONE {
            continue;
        }
        let mut v = b.find_path(root);
        while v != NONE {
            let pv = b.parent[v];
            let next = b.mate[pv];
            b.mate[v] = pv;
            b.mate[pv] = v;
            v = next;
        }
    }
    b.mate
}

/// Maximum matching: augmenting paths on bipartite graphs, blossoms otherwise.
pub fn max_matching(g: &Graph) -> Matching {
    let mate = match bipartition(g) {
        Bipartition::Parts { v1, .. } => kuhn(g, &v1),
        Bipartition::OddCycle(_) => blossom_mate(g),
    };
    Matching::from_mate(&mate)
}

/// Maximum matching by memoized search over vertex subsets.
pub fn max_matching_search(g: &Graph) -> Result<Matching> {
    let n = g.n();
    cap_check("order for matching search", n, SEARCH_MAX_N)?;
    let adj = g.masks();
    let mut memo = vec![-1i8; 1 << n];
    fn best(mask: u64, adj: &[u64], memo: &mut [i8]) -> i8 {
        if mask == 0 {
            return 0;
        }
        if memo[mask as usize] >= 0 {
            return memo[mask as usize];
        }
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        let mut r = best(rest, adj, memo);
        let mut cand = adj[v] & rest;
        while cand != 0 {
            let w = cand.trailing_zeros();
            cand &= cand - 1;
            r = r.max(1 + best(rest & !(1 << w), adj, memo));
        }
        memo[mask as usize] = r;
        r
    }
    let mut mask: u64 = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
    let mut mate = vec![NONE; n];
    while mask != 0 {
        let here = best(mask, &adj, &mut memo);
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        let mut cand = adj[v] & rest;
        let mut next = rest;
        while cand != 0 {
            let w = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            let r = rest & !(1 << w);
            if 1 + best(r, &adj, &mut memo) == here {
                mate[v] = w;
                mate[w] = v;
                next = r;
                break;
            }
        }
        mask = next;
    }
    Ok(Matching::from_mate(&mate))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OptimizationNumbers {
    pub alpha: usize,
    pub beta: usize,
    pub alpha_prime: usize,
    /// None when some vertex is isolated.
    pub beta_prime: Option<usize>,
    pub omega: usize,
    /// |V| − 2α′.
    pub deficiency: usize,
    /// ∑ 1/(1 + d(v)) as a reduced fraction "p/q".
    pub caro_wei: String,
    pub independent_set: Vec<usize>,
    pub vertex_cover: Vec<usize>,
    pub clique: Vec<usize>,
    pub matching: Vec<(usize, usize)>,
    pub edge_cover: Option<Vec<(usize, usize)>>,
}

impl OptimizationNumbers {
    /// α + β = n, α′ + β′ = n when defined, β ≥ α′, and α ≥ ⌈Caro–Wei⌉.
    pub fn identities_hold(&self, n: usize) -> bool {
        let cw: Rational = self.caro_wei.parse().unwrap();
        self.alpha + self.beta == n
            && self.beta_prime.is_none_or(|b| self.alpha_prime + b == n)
            && self.beta >= self.alpha_prime
            && Rational::from_integer(self.alpha as i64) >= cw.ceil()
    }
}

fn bits(mask: u64) -> Vec<usize> {
    (0..64).filter(|&i| mask >> i & 1 == 1).collect()
}

/// Largest independent set inside `p`, by branching on a vertex of most neighbours.
fn max_independent(adj: &[u64], p: u64) -> u64 {
    if p == 0 {
        return 0;
    }
    let mut v = p.trailing_zeros() as usize;
    let mut dv = 0;
    let mut rest = p;
    while rest != 0 {
        let x = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let d = (adj[x] & p).count_ones();
        if d <= 1 {
            // a vertex of degree ≤ 1 may always be taken
            return (1 << x) | max_independent(adj, p & !(1 << x) & !adj[x]);
        }
        if d > dv {
            dv = d;
            v = x;
        }
    }
    let without = max_independent(adj, p & !(1 << v));
    let with = (1 << v) | max_independent(adj, p & !(1 << v) & !adj[v]);
    if with.count_ones() >= without.count_ones() {
        with
    } else {
        without
    }
}

/// Smallest vertex cover, by subsets of increasing size.
fn min_vertex_cover(g: &Graph) -> Vec<usize> {
    let n = g.n();
    for k in 0..=n {
        for s in subsets(n, k) {
            let mask = s.iter().fold(0u64, |m, &v| m | 1 << v);
            if g.edges().iter().all(|&(u, v)| mask >> u & 1 == 1 || mask >> v & 1 == 1) {
                return s;
            }
        }
    }
    (0..n).collect()
}

/// Smallest edge cover by memoized search over uncovered sets.
fn min_edge_cover(g: &Graph) -> Option<Vec<(usize, usize)>> {
    let n = g.n();
    if g.min_degree() == 0 && n > 0 {
        return None;
    }
    let mut memo = vec![u8::MAX; 1 << n];
    fn best(u: u64, g: &Graph, memo: &mut [u8]) -> u8 {
        if u == 0 {
            return 0;
        }
        if memo[u as usize] != u8::MAX {
            return memo[u as usize];
        }
        let v = u.trailing_zeros() as usize;
        let r = g
            .neighbors(v)
            .iter()
            .map(|&w| 1 + best(u & !(1 << v) & !(1 << w), g, memo))
            .min()
            .unwrap();
        memo[u as usize] = r;
        r
    }
    let mut u: u64 = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
    let mut out = Vec::new();
    while u != 0 {
        let here = best(u, g, &mut memo);
        let v = u.trailing_zeros() as usize;
        let w = *g
            .neighbors(v)
            .iter()
            .find(|&&w| 1 + best(u & !(1 << v) & !(1 << w), g, &mut memo) == here)
            .unwrap();
        out.push((v.min(w), v.max(w)));
        u &= !(1 << v) & !(1 << w);
    }
    out.sort_unstable();
    Some(out)
}

/// Caro–Wei sum ∑ 1/(1 + d(v)).
pub fn caro_wei(g: &Graph) -> Rational {
    (0..g.n())
        .map(|v| Rational::new(1, 1 + g.degree(v) as i64))
        .fold(Rational::from_integer(0), |a, b| a + b)
}

/// α, β, α′, β′ and ω, each by its own exact search.
pub fn optimization_numbers(g: &Graph) -> Result<OptimizationNumbers> {
    let n = g.n();
    cap_check("order for exact optimization", n, OPT_MAX_N)?;
    let adj = g.masks();
    let all: u64 = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
    let independent_set = bits(max_independent(&adj, all));
    let co: Vec<u64> = (0..n).map(|v| all & !adj[v] & !(1 << v)).collect();
    let clique = bits(max_independent(&co, all));
    let vertex_cover = min_vertex_cover(g);
    let m = max_matching(g);
    let edge_cover = min_edge_cover(g);
    let cw = caro_wei(g);
    Ok(OptimizationNumbers {
        alpha: independent_set.len(),
        beta: vertex_cover.len(),
        alpha_prime: m.size(),
        beta_prime: edge_cover.as_ref().map(|c| c.len()),
        omega: clique.len(),
        deficiency: n - 2 * m.size(),
        caro_wei: format!("{}/{}", cw.numer(), cw.denom()),
        independent_set,
        vertex_cover,
        clique,
        matching: m.edges,
        edge_cover,
    })
}

/// Independence number alone.
pub fn independence_number(g: &Graph) -> Result<usize> {
    cap_check("order for exact optimization", g.n(), OPT_MAX_N)?;
    let all: u64 = if g.n() == 0 { 0 } else { u64::MAX >> (64 - g.n()) };
    Ok(max_independent(&g.masks(), all).count_ones() as usize)
}

/// Clique number alone.
pub fn clique_number(g: &Graph) -> Result<usize> {
    let n = g.n();
    cap_check("order for exact optimization", n, OPT_MAX_N)?;
    let all: u64 = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
    let adj = g.masks();
    let co: Vec<u64> = (0..n).map(|v| all & !adj[v] & !(1 << v)).collect();
    Ok(max_independent(&co, all).count_ones() as usize)
}

/// o(G − S): components of odd order after removing S.
pub fn odd_components(g: &Graph, s: &[usize]) -> usize {
    let mut rm = vec![false; g.n()];
    for &v in s {
        rm[v] = true;
    }
    let (label, c) = g.component_labels_without(&rm, None);
    let mut size = vec![0usize; c];
    for &l in label.iter().filter(|&&l| l != NONE) {
        size[l] += 1;
    }
    size.iter().filter(|&&s| s % 2 == 1).count()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TutteBerge {
    /// |V| − 2α′ from the matching.
    pub deficiency: usize,
    /// max over S of o(G − S) − |S|.
    pub berge_max: usize,
    /// Lexicographically least maximizing S.
    pub set: Vec<usize>,
    pub odd_components: usize,
    /// o(G − S) ≤ |S| for every S.
    pub tutte_holds: bool,
    pub perfect_matching: Option<Vec<(usize, usize)>>,
}

/// Matching deficiency checked against the Tutte–Berge subset maximum.
pub fn matching_deficiency(g: &Graph) -> Result<TutteBerge> {
    let n = g.n();
    cap_check("order for Tutte-Berge enumeration", n, TUTTE_MAX_N)?;
    let mut best: Option<(i64, Vec<usize>, usize)> = None;
    for mask in 0u64..1 << n {
        let s = bits(mask);
        let o = odd_components(g, &s);
        let val = o as i64 - s.len() as i64;
        let better = match &best {
            None => true,
            Some((bv, bs, _)) => val > *bv || (val == *bv && s < *bs),
        };
        if better {
            best = Some((val, s, o));
        }
    }
    let (val, set, o) = best.unwrap();
    let m = max_matching(g);
    let deficiency = n - 2 * m.size();
    Ok(TutteBerge {
        deficiency,
        berge_max: val.max(0) as usize,
        set,
        odd_components: o,
        tutte_holds: val <= 0,
        perfect_matching: m.is_perfect(n).then_some(m.edges),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SdrOutcome {
    /// Representative of each set, in order.
    Transversal(Vec<usize>),
    /// Indices of sets whose union has fewer elements than sets.
    Violator(Vec<usize>),
}

/// System of distinct representatives, or a subfamily breaking Hall's condition.
pub fn sdr(sets: &[Vec<usize>]) -> SdrOutcome {
    let k = sets.len();
    let mut elems: Vec<usize> = sets.iter().flatten().copied().collect();
    elems.sort_unstable();
    elems.dedup();
    let g = Graph::from_edges(
        k + elems.len(),
        sets.iter().enumerate().flat_map(|(i, s)| {
            let elems = &elems;
            s.iter().map(move |x| (i, k + elems.binary_search(x).unwrap()))
        }),
    );
    let left: Vec<usize> = (0..k).collect();
    let bm = bipartite_matching(&g, Some(&left)).expect("sets and elements form the sides");
    match bm.hall_violator {
        Some(s) => SdrOutcome::Violator(s),
        None => {
            let mut mate = vec![NONE; g.n()];
            for &(a, b) in &bm.matching.edges {
                mate[a] = b;
            }
            SdrOutcome::Transversal((0..k).map(|i| elems[mate[i] - k]).collect())
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Line {
    Row(usize),
    Col(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatrixMinMax {
    /// Ones in pairwise distinct rows and columns.
    pub ones: Vec<(usize, usize)>,
    /// Rows and columns covering every one.
    pub lines: Vec<Line>,
}

/// Most independent ones and fewest covering lines of a 0/1 matrix.
pub fn matrix_minmax(a: &[Vec<u8>]) -> Result<MatrixMinMax> {
    let r = a.len();
    let c = a.first().map_or(0, |row| row.len());
    if a.iter().any(|row| row.len() != c || row.iter().any(|&x| x > 1)) {
        return Err(Error::BadParams("matrix must be rectangular with 0/1 entries".into()));
    }
    let g = Graph::from_edges(
        r + c,
        (0..r).flat_map(|i| (0..c).filter(move |&j| a[i][j] == 1).map(move |j| (i, r + j))),
    );
    let left: Vec<usize> = (0..r).collect();
    let bm = bipartite_matching(&g, Some(&left))?;
    Ok(MatrixMinMax {
        ones: bm.matching.edges.iter().map(|&(i, j)| (i, j - r)).collect(),
        lines: bm
            .cover
            .iter()
            .map(|&v| if v < r { Line::Row(v) } else { Line::Col(v - r) })
            .collect(),
    })
}

/// Finite partial order; `rel[x][y]` means x ≤ y.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Poset {
    n: usize,
    rel: Vec<Vec<bool>>,
}

impl Poset {
    pub fn new(rel: Vec<Vec<bool>>) -> Result<Poset> {
        let n = rel.len();
        if rel.iter().any(|row| row.len() != n) {
            return Err(Error::BadParams("relation matrix must be square".into()));
        }
        for x in 0..n {
            if !rel[x][x] {
                return Err(Error::BadParams(format!("not reflexive at {x}")));
            }
            for y in 0..n {
                if x != y && rel[x][y] && rel[y][x] {
                    return Err(Error::BadParams(format!("not antisymmetric at {x}, {y}")));
                }
                for z in 0..n {
                    if rel[x][y] && rel[y][z] && !rel[x][z] {
                        return Err(Error::BadParams(format!("not transitive at {x}, {y}, {z}")));
                    }
                }
            }
        }
        Ok(Poset { n, rel })
    }

    /// Reflexive-transitive closure of the listed pairs x ≤ y.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Poset> {
        let mut rel = vec![vec![false; n]; n];
        for (x, row) in rel.iter_mut().enumerate() {
            row[x] = true;
        }
        for &(x, y) in pairs {
            if x >= n || y >= n {
                return Err(Error::OutOfRange { vertex: x.max(y), n });
            }
            rel[x][y] = true;
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
        Poset::new(rel)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.rel[x][y]
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.rel[x][y] || self.rel[y][x]
    }

    pub fn is_antichain(&self, s: &[usize]) -> bool {
        s.iter().enumerate().all(|(i, &x)| s[i + 1..].iter().all(|&y| !self.comparable(x, y)))
    }

    pub fn is_chain(&self, s: &[usize]) -> bool {
        s.iter().enumerate().all(|(i, &x)| s[i + 1..].iter().all(|&y| self.comparable(x, y)))
    }

    fn sort_chain(&self, c: &mut [usize]) {
        c.sort_by_key(|&x| (0..self.n).filter(|&y| self.rel[y][x]).count());
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DilworthMethod {
    BruteForce,
    Matching,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DilworthReport {
    pub antichain: Vec<usize>,
    /// Chains partitioning the ground set, each listed bottom to top.
    pub chains: Vec<Vec<usize>>,
    pub method: DilworthMethod,
}

/// Largest antichain and smallest chain partition; brute force for small posets.
pub fn dilworth(p: &Poset) -> Result<DilworthReport> {
    if p.n <= DILWORTH_BRUTE_MAX {
        dilworth_bruteforce(p)
    } else {
        Ok(dilworth_by_matching(p))
    }
}

pub fn dilworth_bruteforce(p: &Poset) -> Result<DilworthReport> {
    let n = p.n;
    cap_check("poset size for brute force", n, DILWORTH_BRUTE_MAX)?;
    let antichain = (0..=n)
        .rev()
        .find_map(|k| subsets(n, k).find(|s| p.is_antichain(s)))
        .unwrap_or_default();
    fn fill(p: &Poset, x: usize, k: usize, chains: &mut Vec<Vec<usize>>) -> bool {
        if x == p.n {
            return true;
        }
        for i in 0..chains.len() {
            if chains[i].iter().all(|&y| p.comparable(x, y)) {
                chains[i].push(x);
                if fill(p, x + 1, k, chains) {
                    return true;
                }
                chains[i].pop();
            }
        }
        if chains.len() < k {
            chains.push(vec![x]);
            if fill(p, x + 1, k, chains) {
                return true;
            }
            chains.pop();
        }
        false
    }
    let mut chains = Vec::new();
    for k in 0..=n {
        chains.clear();
        if fill(p, 0, k, &mut chains) {
            break;
        }
    }
    for c in &mut chains {
        p.sort_chain(c);
    }
    Ok(DilworthReport {
        antichain,
        chains,
        method: DilworthMethod::BruteForce,
    })
}

/// Chains from a matching between lower and upper copies; the antichain is
/// read off the König cover.
pub fn dilworth_by_matching(p: &Poset) -> DilworthReport {
    let n = p.n;
    let g = Graph::from_edges(
        2 * n,
        (0..n).flat_map(|x| (0..n).filter(move |&y| x != y && p.rel[x][y]).map(move |y| (x, n + y))),
    );
    let left: Vec<usize> = (0..n).collect();
    let bm = bipartite_matching(&g, Some(&left)).expect("copies form the sides");
    let mut next = vec![NONE; n];
    let mut has_pred = vec![false; n];
    for &(x, y) in &bm.matching.edges {
        next[x] = y - n;
        has_pred[y - n] = true;
    }
    let chains = (0..n)
        .filter(|&x| !has_pred[x])
        .map(|mut x| {
            let mut c = vec![x];
            while next[x] != NONE {
                x = next[x];
                c.push(x);
            }
            c
        })
        .collect();
    let mut in_cover = vec![false; 2 * n];
    for &v in &bm.cover {
        in_cover[v] = true;
    }
    DilworthReport {
        antichain: (0..n).filter(|&x| !in_cover[x] && !in_cover[n + x]).collect(),
        chains,
        method: DilworthMethod::Matching,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FFactorGadget {
    pub graph: Graph,
    /// A(v): one port per edge at v, in neighbour order.
    pub ports: Vec<Vec<usize>>,
    /// B(v): e(v) = d(v) − f(v) vertices joined to every port of v.
    pub inner: Vec<Vec<usize>>,
    /// Gadget edge standing for each edge of the original graph.
    pub edge_links: Vec<(usize, usize)>,
}

/// Replaces every vertex v by K_{d(v), e(v)} and every edge uv by an edge between ports.
pub fn f_factor_gadget(g: &Graph, f: &[usize]) -> Result<FFactorGadget> {
    let n = g.n();
    if f.len() != n {
        return Err(Error::BadParams(format!("f has {} values for {n} vertices", f.len())));
    }
    if let Some(v) = (0..n).find(|&v| f[v] > g.degree(v)) {
        return Err(Error::InfeasibleDegrees(v));
    }
    let mut next = 0;
    let mut ports = Vec::with_capacity(n);
    let mut inner = Vec::with_capacity(n);
    let mut edges = Vec::new();
    for v in 0..n {
        let d = g.degree(v);
        let a: Vec<usize> = (next..next + d).collect();
        let b: Vec<usize> = (next + d..next + 2 * d - f[v]).collect();
        next += 2 * d - f[v];
        for &x in &a {
            for &y in &b {
                edges.push((x, y));
            }
        }
        ports.push(a);
        inner.push(b);
    }
    let port = |v: usize, w: usize| ports[v][g.neighbors(v).binary_search(&w).unwrap()];
    let edge_links: Vec<(usize, usize)> = g.edges().iter().map(|&(u, v)| (port(u, v), port(v, u))).collect();
    edges.extend(edge_links.iter().copied());
    Ok(FFactorGadget {
        graph: Graph::from_edges(next, edges),
        ports,
        inner,
        edge_links,
    })
}

/// Spanning subgraph with degree f(v) at every v, read off a perfect matching of the gadget.
pub fn f_factor(g: &Graph, f: &[usize]) -> Result<Option<Graph>> {
    let gadget = f_factor_gadget(g, f)?;
    let m = max_matching(&gadget.graph);
    if !m.is_perfect(gadget.graph.n()) {
        return Ok(None);
    }
    let chosen = g
        .edges()
        .iter()
        .zip(&gadget.edge_links)
        .filter(|(_, &(a, b))| m.edges.binary_search(&(a.min(b), a.max(b))).is_ok())
        .map(|(&e, _)| e);
    Ok(Some(Graph::from_edges(g.n(), chosen)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FactorKind {
    /// 1-factors of a regular bipartite graph.
    OneRegularBipartite,
    /// 2-factors of a 2k-regular graph.
    TwoEvenRegular,
    /// 1-factors of K_{2l} by rotation.
    OneComplete,
}

impl std::str::FromStr for FactorKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<FactorKind> {
        match s {
            "one_regular_bipartite" => Ok(FactorKind::OneRegularBipartite),
            "two_even_regular" => Ok(FactorKind::TwoEvenRegular),
            "one_k2n" | "one_complete" => Ok(FactorKind::OneComplete),
            _ => Err(Error::BadParams(format!("unknown factorization {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Factorization {
    pub kind: FactorKind,
    /// Degree every vertex has in every part.
    pub degree: usize,
    pub parts: Vec<Vec<(usize, usize)>>,
}

impl Factorization {
    /// The parts partition E(G) and each part is a spanning `degree`-regular subgraph.
    pub fn verify(&self, g: &Graph) -> bool {
        let mut used = vec![false; g.m()];
        for part in &self.parts {
            let mut deg = vec![0; g.n()];
            for &(u, v) in part {
                match g.edge_id(u, v) {
                    Some(e) if !used[e] => used[e] = true,
                    _ => return false,
                }
                deg[u] += 1;
                deg[v] += 1;
            }
            if deg.iter().any(|&d| d != self.degree) {
                return false;
            }
        }
        used.iter().all(|&u| u)
    }
}

fn regular_degree(g: &Graph) -> Option<usize> {
    let d = g.min_degree();
    (g.max_degree() == d).then_some(d)
}

/// Perfect matchings of K_n (n even): v_0 v_i plus the pairs v_{i−j} v_{i+j},
/// indices taken in 1..n−1 modulo n − 1.
pub fn complete_one_factors(n: usize) -> Result<Vec<Vec<(usize, usize)>>> {
    if n < 2 || n % 2 == 1 {
        return Err(Error::WrongClass(format!("K_{n} has odd or too small order")));
    }
    let q = (n - 1) as i64;
    let wrap = |x: i64| ((x - 1).rem_euclid(q) + 1) as usize;
    Ok((1..n)
        .map(|i| {
            let i = i as i64;
            let mut part: Vec<(usize, usize)> = std::iter::once((0, i as usize))
                .chain((1..n as i64 / 2).map(|j| {
                    let (a, b) = (wrap(i - j), wrap(i + j));
                    (a.min(b), a.max(b))
                }))
                .collect();
            part.sort_unstable();
            part
        })
        .collect())
}

/// Splits an r-regular bipartite graph into r perfect matchings.
pub(crate) fn peel_matchings(g: &Graph, left: &[usize], r: usize) -> Result<Vec<Vec<(usize, usize)>>> {
    let mut h = g.clone();
    let mut parts = Vec::with_capacity(r);
    for _ in 0..r {
        let m = bipartite_matching(&h, Some(left))?.matching;
        if !m.is_perfect(h.n()) {
            return Err(Error::WrongClass("regular bipartite graph without a perfect matching".into()));
        }
        h = Graph::from_edges(h.n(), h.edges().iter().copied().filter(|e| m.edges.binary_search(e).is_err()));
        parts.push(m.edges);
    }
    Ok(parts)
}

/// Auxiliary bipartite graph of a closed walk: u_i = i, w_j = n + j, with
/// u_i w_j for every step v_i → v_j.
pub fn euler_auxiliary(n: usize, circuits: &[Vec<usize>]) -> Graph {
    Graph::from_edges(
        2 * n,
        circuits.iter().flat_map(|c| c.windows(2).map(|w| (w[0], n + w[1]))),
    )
}

/// 2-factors of a 2k-regular graph from Euler circuits of its components.
pub fn two_factorization_from_circuits(g: &Graph, circuits: &[Vec<usize>]) -> Result<Factorization> {
    let n = g.n();
    let d = regular_degree(g).filter(|d| d % 2 == 0).ok_or_else(|| Error::WrongClass("not even regular".into()))?;
    let mut used = vec![false; g.m()];
    for c in circuits {
        if c.first() != c.last() {
            return Err(Error::BadParams("circuit is not closed".into()));
        }
        for w in c.windows(2) {
            match g.edge_id(w[0], w[1]) {
                Some(e) if !used[e] => used[e] = true,
                _ => return Err(Error::BadParams(format!("step {}-{} is not a fresh edge", w[0], w[1]))),
            }
        }
    }
    if used.iter().any(|&u| !u) {
        return Err(Error::BadParams("circuits miss an edge".into()));
    }
    let h = euler_auxiliary(n, circuits);
    let left: Vec<usize> = (0..n).collect();
    let parts = peel_matchings(&h, &left, d / 2)?
        .into_iter()
        .map(|m| {
            let mut part: Vec<(usize, usize)> = m.iter().map(|&(a, b)| (a.min(b - n), a.max(b - n))).collect();
            part.sort_unstable();
            part
        })
        .collect();
    Ok(Factorization {
        kind: FactorKind::TwoEvenRegular,
        degree: 2,
        parts,
    })
}

pub fn factorize(g: &Graph, kind: FactorKind) -> Result<Factorization> {
    match kind {
        FactorKind::OneRegularBipartite => {
            let r = regular_degree(g).ok_or_else(|| Error::WrongClass("not regular".into()))?;
            let left = match bipartition(g) {
                Bipartition::Parts { v1, .. } => v1,
                Bipartition::OddCycle(_) => return Err(Error::WrongClass("not bipartite".into())),
            };
            Ok(Factorization {
                kind,
                degree: 1,
                parts: peel_matchings(g, &left, r)?,
            })
        }
        FactorKind::TwoEvenRegular => {
            let circuits: Vec<Vec<usize>> = g
                .components()
                .into_iter()
                .filter(|c| c.len() > 1)
                .map(|c| crate::traversal::hierholzer(g, c[0]))
                .collect();
            two_factorization_from_circuits(g, &circuits)
        }
        FactorKind::OneComplete => {
            if !g.is_complete() {
                return Err(Error::WrongClass("not complete".into()));
            }
            Ok(Factorization {
                kind,
                degree: 1,
                parts: complete_one_factors(g.n())?,
            })
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Arboricity {
    pub value: usize,
    /// Vertex set attaining the maximum of ⌈m(H)/(n(H) − 1)⌉.
    pub densest: Vec<usize>,
    pub forests: Vec<Vec<(usize, usize)>>,
}

/// max over vertex sets with at least two vertices of ⌈m(H)/(|H| − 1)⌉.
pub fn nash_williams(g: &Graph) -> Result<(usize, Vec<usize>)> {
    let n = g.n();
    cap_check("order for Nash-Williams maximum", n, ARBORICITY_MAX_N)?;
    let mut best = (0, Vec::new());
    for mask in 0u64..1 << n {
        let k = mask.count_ones() as usize;
        if k < 2 {
            continue;
        }
        let m = g
            .edges()
            .iter()
            .filter(|&&(u, v)| mask >> u & 1 == 1 && mask >> v & 1 == 1)
            .count();
        let val = m.div_ceil(k - 1);
        if val > best.0 {
            best = (val, bits(mask));
        }
    }
    Ok(best)
}

/// Edge ids on the path joining u and v in the forest `part`, if they are connected.
fn forest_path(n: usize, es: &[(usize, usize)], part: &[usize], u: usize, v: usize) -> Option<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &id in part {
        let (a, b) = es[id];
        adj[a].push((b, id));
        adj[b].push((a, id));
    }
    let mut via = vec![None; n];
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([u]);
    seen[u] = true;
    while let Some(x) = queue.pop_front() {
        for &(y, id) in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                via[y] = Some((x, id));
                queue.push_back(y);
            }
        }
    }
    if !seen[v] {
        return None;
    }
    let mut path = Vec::new();
    let mut x = v;
    while let Some((p, id)) = via[x] {
        path.push(id);
        x = p;
    }
    Some(path)
}

/// Splits the edges into `k` forests by matroid partition: each new edge starts
/// a breadth-first search over exchanges (an edge enters a forest and pushes out
/// an edge of the cycle it closes) until some edge fits a forest outright; the
/// shortest exchange chain is then applied.
pub fn forest_decomposition(g: &Graph, k: usize) -> Option<Vec<Vec<(usize, usize)>>> {
    let es = g.edges();
    let m = es.len();
    let n = g.n();
    if m > 0 && k == 0 {
        return None;
    }
    let mut owner: Vec<Option<usize>> = vec![None; m];
    for e in 0..m {
        let parts: Vec<Vec<usize>> = (0..k)
            .map(|f| (0..m).filter(|&x| owner[x] == Some(f)).collect())
            .collect();
        let mut parent = vec![usize::MAX; m];
        let mut seen = vec![false; m];
        seen[e] = true;
        let mut queue = VecDeque::from([e]);
        let mut end = None;
        'bfs: while let Some(x) = queue.pop_front() {
            let (u, v) = es[x];
            for f in 0..k {
                if owner[x] == Some(f) {
                    continue;
                }
                match forest_path(n, es, &parts[f], u, v) {
                    None => {
                        end = Some((x, f));
                        break 'bfs;
                    }
                    Some(cycle) => {
                        for y in cycle {
                            if !seen[y] {
                                seen[y] = true;
                                parent[y] = x;
                                queue.push_back(y);
                            }
                        }
                    }
                }
            }
        }
        let (mut cur, mut target) = end?;
        loop {
            let old = owner[cur];
            owner[cur] = Some(target);
            if cur == e {
                break;
            }
            target = old.expect("chain edges already lie in a forest");
            cur = parent[cur];
        }
    }
    let mut parts = vec![Vec::new(); k];
    for (i, f) in owner.iter().enumerate() {
        parts[f.expect("every edge placed")].push(es[i]);
    }
    Some(parts)
}

/// a(G) by the Nash-Williams maximum, with a decomposition into that many forests.
pub fn arboricity(g: &Graph) -> Result<Arboricity> {
    let (value, densest) = nash_williams(g)?;
    let forests = forest_decomposition(g, value)
        .ok_or_else(|| Error::BudgetExhausted("no forest decomposition of the predicted size".into()))?;
    Ok(Arboricity {
        value,
        densest,
        forests,
    })
}
