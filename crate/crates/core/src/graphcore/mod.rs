//! Graph values, degrees, distances, components, bipartiteness and walks.

mod bipartite;
pub mod enumerate;
mod metrics;
mod walk;

pub use bipartite::{
    bipartition, incidence_det_minor, large_bipartite_subgraph, unimodularity_check, Bipartition,
    LargeBipartite, UnimodularityVerdict,
};
pub(crate) use bipartite::subsets;
pub use metrics::{metrics, Metrics};
pub use walk::{classify_walk, extract_odd_cycle, reduce_to_simple_path, WalkClass, WalkKind};

use crate::error::{Error, Result};
use crate::Count;
use num_traits::One;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Simple,
    Multi,
    Pseudo,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Simple => "simple",
            Mode::Multi => "multi",
            Mode::Pseudo => "pseudo",
        }
    }
}

impl std::str::FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Mode> {
        match s {
            "simple" => Ok(Mode::Simple),
            "multi" => Ok(Mode::Multi),
            "pseudo" => Ok(Mode::Pseudo),
            _ => Err(Error::BadParams(format!("unknown mode {s:?}"))),
        }
    }
}

/// Simple undirected graph on vertices `0..n`.
///
/// Edges are kept as `(u, v)` with `u < v`, sorted; the position of an edge in
/// [`Graph::edges`] is its edge id everywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Graph", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("edges", &self.edges)?;
        st.end()
    }
}

impl Graph {
    /// Strict constructor: loops and repeated pairs are errors.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut es = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::OutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::LoopInSimple(u));
            }
            es.push((u.min(v), u.max(v)));
        }
        es.sort_unstable();
        if let Some(w) = es.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::ParallelInSimple(w[0].0, w[0].1));
        }
        Ok(Graph::from_sorted(n, es))
    }

    /// Builds from pairs known to be in range, dropping loops and duplicates.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
        let mut es: Vec<(usize, usize)> = edges
            .into_iter()
            .filter(|&(u, v)| u != v)
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        assert!(es.iter().all(|&(_, v)| v < n), "endpoint out of range");
        es.sort_unstable();
        es.dedup();
        Graph::from_sorted(n, es)
    }

    fn from_sorted(n: usize, edges: Vec<(usize, usize)>) -> Graph {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn empty(n: usize) -> Graph {
        Graph::from_sorted(n, Vec::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn is_complete(&self) -> bool {
        self.m() * 2 == self.n * self.n.saturating_sub(1)
    }

    /// Adjacency bitmasks; only for `n <= 64`.
    pub fn masks(&self) -> Vec<u64> {
        assert!(self.n <= 64, "bitmask view needs n <= 64");
        self.adj
            .iter()
            .map(|a| a.iter().fold(0u64, |acc, &v| acc | (1 << v)))
            .collect()
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Graph {
        Graph::from_edges(self.n, self.edges.iter().copied().chain([(u, v)]))
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let e = (u.min(v), u.max(v));
        Graph::from_sorted(self.n, self.edges.iter().copied().filter(|&x| x != e).collect())
    }

    /// Induced subgraph on `vs` (relabelled `0..vs.len()` in the given order).
    pub fn induced(&self, vs: &[usize]) -> Graph {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in vs.iter().enumerate() {
            pos[v] = i;
        }
        Graph::from_edges(
            vs.len(),
            self.edges
                .iter()
                .filter(|&&(u, v)| pos[u] != usize::MAX && pos[v] != usize::MAX)
                .map(|&(u, v)| (pos[u], pos[v])),
        )
    }

    /// Component label per vertex (labels in order of least vertex) and the count.
    pub fn component_labels(&self) -> (Vec<usize>, usize) {
        self.component_labels_without(&vec![false; self.n], None)
    }

    /// Components of `G - S - F` where `removed` marks S and `removed_edges` marks F.
    /// Removed vertices get label `usize::MAX`.
    pub fn component_labels_without(
        &self,
        removed: &[bool],
        removed_edges: Option<&[bool]>,
    ) -> (Vec<usize>, usize) {
        let mut label = vec![usize::MAX; self.n];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..self.n {
            if removed[s] || label[s] != usize::MAX {
                continue;
            }
            label[s] = count;
            stack.push(s);
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if removed[w] || label[w] != usize::MAX {
                        continue;
                    }
                    if let Some(re) = removed_edges {
                        if re[self.edge_id(u, w).unwrap()] {
                            continue;
                        }
                    }
                    label[w] = count;
                    stack.push(w);
                }
            }
            count += 1;
        }
        (label, count)
    }

    pub fn component_count(&self) -> usize {
        self.component_labels().1
    }

    /// c(G - S) for a vertex mask (n <= 64).
    pub fn components_without_mask(&self, removed: u64) -> usize {
        let rm: Vec<bool> = (0..self.n).map(|v| removed >> v & 1 == 1).collect();
        self.component_labels_without(&rm, None).1
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let (label, c) = self.component_labels();
        let mut out = vec![Vec::new(); c];
        for (v, &l) in label.iter().enumerate() {
            out[l].push(v);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Breadth-first distances from `s`; `None` for unreachable vertices.
    pub fn bfs(&self, s: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = std::collections::VecDeque::new();
        dist[s] = Some(0);
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Shortest path from `s` to `t` as a vertex list.
    pub fn shortest_path(&self, s: usize, t: usize) -> Option<Vec<usize>> {
        let mut parent = vec![usize::MAX; self.n];
        let mut seen = vec![false; self.n];
        let mut queue = std::collections::VecDeque::new();
        seen[s] = true;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            if u == t {
                let mut path = vec![t];
                let mut x = t;
                while x != s {
                    x = parent[x];
                    path.push(x);
                }
                path.reverse();
                return Some(path);
            }
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        None
    }

    pub fn has_cycle(&self) -> bool {
        self.m() + self.component_count() > self.n
    }

    /// Adjacency matrix A(G).
    pub fn adjacency_matrix(&self) -> Vec<Vec<u8>> {
        let mut a = vec![vec![0u8; self.n]; self.n];
        for &(u, v) in &self.edges {
            a[u][v] = 1;
            a[v][u] = 1;
        }
        a
    }

    /// Incidence matrix B(G): rows are vertices, column j is edge j.
    pub fn incidence_matrix(&self) -> Vec<Vec<u8>> {
        let mut b = vec![vec![0u8; self.m()]; self.n];
        for (j, &(u, v)) in self.edges.iter().enumerate() {
            b[u][j] = 1;
            b[v][j] = 1;
        }
        b
    }

    pub fn degree_profile(&self) -> DegreeView {
        DegreeView::from_degrees(self.degrees())
    }

    /// N(S): vertices outside S adjacent to some vertex of S.
    pub fn set_neighborhood(&self, s: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.n];
        for &v in s {
            inside[v] = true;
        }
        let mut out: Vec<usize> = s
            .iter()
            .flat_map(|&v| self.adj[v].iter().copied())
            .filter(|&w| !inside[w])
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// ∂(S): edges with exactly one endpoint in S.
    pub fn boundary(&self, s: &[usize]) -> Vec<(usize, usize)> {
        let mut inside = vec![false; self.n];
        for &v in s {
            inside[v] = true;
        }
        self.edges
            .iter()
            .copied()
            .filter(|&(u, v)| inside[u] != inside[v])
            .collect()
    }

    pub fn to_multigraph(&self) -> MultiGraph {
        MultiGraph {
            n: self.n,
            edges: self.edges.clone(),
            allow_loops: false,
        }
    }
}

/// Graph with parallel edges, and loops when `allow_loops` is set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    allow_loops: bool,
}

impl MultiGraph {
    pub fn new(n: usize, edges: &[(usize, usize)], allow_loops: bool) -> Result<MultiGraph> {
        let mut es = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::OutOfRange { vertex: w, n });
                }
            }
            if u == v && !allow_loops {
                return Err(Error::LoopInMulti(u));
            }
            es.push((u.min(v), u.max(v)));
        }
        es.sort_unstable();
        Ok(MultiGraph {
            n,
            edges: es,
            allow_loops,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn allow_loops(&self) -> bool {
        self.allow_loops
    }

    pub fn mode(&self) -> Mode {
        if self.allow_loops {
            Mode::Pseudo
        } else {
            Mode::Multi
        }
    }

    /// Degrees with each loop counted twice.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(u, v) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        let e = (u.min(v), u.max(v));
        self.edges.iter().filter(|&&x| x == e).count()
    }

    pub fn loop_count(&self) -> usize {
        self.edges.iter().filter(|&&(u, v)| u == v).count()
    }

    pub fn degree_profile(&self) -> DegreeView {
        DegreeView::from_degrees(self.degrees())
    }

    /// The underlying simple graph if there are no loops or repeated pairs.
    pub fn to_simple(&self) -> Result<Graph> {
        Graph::new(self.n, &self.edges)
    }
}

/// A graph in any of the three modes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyGraph {
    Simple(Graph),
    Multi(MultiGraph),
}

impl AnyGraph {
    pub fn n(&self) -> usize {
        match self {
            AnyGraph::Simple(g) => g.n(),
            AnyGraph::Multi(g) => g.n(),
        }
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        match self {
            AnyGraph::Simple(g) => g.edges(),
            AnyGraph::Multi(g) => g.edges(),
        }
    }

    pub fn mode(&self) -> Mode {
        match self {
            AnyGraph::Simple(_) => Mode::Simple,
            AnyGraph::Multi(g) => g.mode(),
        }
    }

    pub fn degree_profile(&self) -> DegreeView {
        match self {
            AnyGraph::Simple(g) => g.degree_profile(),
            AnyGraph::Multi(g) => g.degree_profile(),
        }
    }

    pub fn as_simple(&self) -> Result<&Graph> {
        match self {
            AnyGraph::Simple(g) => Ok(g),
            AnyGraph::Multi(_) => Err(Error::WrongClass("a simple graph is required".into())),
        }
    }
}

/// Builds a graph in the requested mode.
pub fn build(n: usize, edges: &[(usize, usize)], mode: Mode) -> Result<AnyGraph> {
    match mode {
        Mode::Simple => Graph::new(n, edges).map(AnyGraph::Simple),
        Mode::Multi => MultiGraph::new(n, edges, false).map(AnyGraph::Multi),
        Mode::Pseudo => MultiGraph::new(n, edges, true).map(AnyGraph::Multi),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeView {
    pub degrees: Vec<usize>,
    pub min_degree: usize,
    pub max_degree: usize,
    pub degree_sum: usize,
    pub odd_vertices: Vec<usize>,
}

impl DegreeView {
    fn from_degrees(degrees: Vec<usize>) -> DegreeView {
        DegreeView {
            min_degree: degrees.iter().copied().min().unwrap_or(0),
            max_degree: degrees.iter().copied().max().unwrap_or(0),
            degree_sum: degrees.iter().sum(),
            odd_vertices: (0..degrees.len()).filter(|&v| degrees[v] % 2 == 1).collect(),
            degrees,
        }
    }
}

/// Number of labelled graphs on n vertices and the number of those with all degrees even.
pub fn enumeration_counts(n: usize) -> Result<(Count, Count)> {
    if n == 0 {
        return Err(Error::BadParams("n must be at least 1".into()));
    }
    let pairs = n * (n - 1) / 2;
    let even = (n - 1) * n.saturating_sub(2) / 2;
    Ok((Count::one() << pairs, Count::one() << even))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_modes() {
        let g = build(4, &[(0, 1), (1, 2), (2, 3), (0, 3), (1, 3)], Mode::Simple).unwrap();
        assert_eq!(g.edges().len(), 5);
        assert_eq!(build(3, &[(0, 0)], Mode::Simple), Err(Error::LoopInSimple(0)));
        assert_eq!(
            build(3, &[(0, 1), (1, 0)], Mode::Simple),
            Err(Error::ParallelInSimple(0, 1))
        );
        let m = build(4, &[(0, 1), (0, 1), (1, 2)], Mode::Multi).unwrap();
        assert_eq!(m.edges().len(), 3);
        assert_eq!(build(2, &[(0, 2)], Mode::Pseudo), Err(Error::OutOfRange { vertex: 2, n: 2 }));
    }

    #[test]
    fn k1_matrices() {
        let g = Graph::empty(1);
        assert_eq!(g.adjacency_matrix(), vec![vec![0]]);
        assert_eq!(g.incidence_matrix(), vec![Vec::<u8>::new()]);
    }

    #[test]
    fn counts_small() {
        let one = Count::from(1);
        assert_eq!(enumeration_counts(1).unwrap(), (one.clone(), one));
        assert_eq!(enumeration_counts(3).unwrap(), (Count::from(8), Count::from(2)));
        assert_eq!(enumeration_counts(4).unwrap(), (Count::from(64), Count::from(8)));
    }
}
