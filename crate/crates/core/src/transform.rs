//! Local edits, complements, unions, joins, products and derived graphs.

use crate::error::{Error, Result};
use crate::graphcore::Graph;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Edit {
    /// Vertices above `v` shift down by one.
    DeleteVertex(usize),
    /// Adds an isolated vertex `n`.
    AddVertex,
    DeleteEdge(usize, usize),
    AddEdge(usize, usize),
    /// Replaces uv by a path u, n, v through a new vertex `n`.
    Subdivide(usize, usize),
}

fn check_vertex(g: &Graph, v: usize) -> Result<()> {
    if v < g.n() {
        Ok(())
    } else {
        Err(Error::Missing(format!("vertex {v}")))
    }
}

fn check_edge(g: &Graph, u: usize, v: usize) -> Result<()> {
    if g.has_edge(u, v) {
        Ok(())
    } else {
        Err(Error::Missing(format!("edge {u}-{v}")))
    }
}

pub fn edit(g: &Graph, action: Edit) -> Result<Graph> {
    let n = g.n();
    match action {
        Edit::DeleteVertex(v) => {
            check_vertex(g, v)?;
            let f = |x: usize| if x > v { x - 1 } else { x };
            Ok(Graph::from_edges(
                n - 1,
                g.edges()
                    .iter()
                    .filter(|&&(a, b)| a != v && b != v)
                    .map(|&(a, b)| (f(a), f(b))),
            ))
        }
        Edit::AddVertex => Ok(Graph::from_edges(n + 1, g.edges().iter().copied())),
        Edit::DeleteEdge(u, v) => {
            check_edge(g, u, v)?;
            Ok(g.without_edge(u, v))
        }
        Edit::AddEdge(u, v) => {
            check_vertex(g, u)?;
            check_vertex(g, v)?;
            if u == v {
                return Err(Error::LoopInSimple(u));
            }
            if g.has_edge(u, v) {
                return Err(Error::AlreadyPresent(format!("edge {u}-{v}")));
            }
            Ok(g.with_edge(u, v))
        }
        Edit::Subdivide(u, v) => {
            check_edge(g, u, v)?;
            let e = (u.min(v), u.max(v));
            Ok(Graph::from_edges(
                n + 1,
                g.edges()
                    .iter()
                    .copied()
                    .filter(|&x| x != e)
                    .chain([(u, n), (v, n)]),
            ))
        }
    }
}

/// G/H: the vertices of `h` merge into one new vertex `w`, placed last; the
/// remaining vertices keep their relative order. Loops and parallels are dropped.
pub fn contract(g: &Graph, h: &[usize]) -> Result<Graph> {
    if h.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut inside = vec![false; g.n()];
    for &v in h {
        check_vertex(g, v)?;
        inside[v] = true;
    }
    let mut map = vec![0; g.n()];
    let mut k = 0;
    for v in 0..g.n() {
        if !inside[v] {
            map[v] = k;
            k += 1;
        }
    }
    for v in 0..g.n() {
        if inside[v] {
            map[v] = k;
        }
    }
    Ok(Graph::from_edges(
        k + 1,
        g.edges().iter().map(|&(a, b)| (map[a], map[b])),
    ))
}

/// Contracts the edge uv; the merged vertex is last.
pub fn contract_edge(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    check_edge(g, u, v)?;
    contract(g, &[u, v])
}

pub fn complement(g: &Graph) -> Graph {
    let n = g.n();
    Graph::from_edges(
        n,
        (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !g.has_edge(u, v)),
    )
}

/// Disjoint union; `h` is shifted by `g.n()`.
pub fn union(g: &Graph, h: &Graph) -> Graph {
    let s = g.n();
    Graph::from_edges(
        s + h.n(),
        g.edges()
            .iter()
            .copied()
            .chain(h.edges().iter().map(|&(u, v)| (u + s, v + s))),
    )
}

/// Union plus every edge between the two parts.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let s = g.n();
    let u = union(g, h);
    let cross = (0..s).flat_map(|a| (0..h.n()).map(move |b| (a, s + b)));
    Graph::from_edges(u.n(), u.edges().iter().copied().chain(cross))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProductKind {
    Cartesian,
    Tensor,
    Strong,
    Lexicographic,
}

impl std::str::FromStr for ProductKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<ProductKind> {
        match s {
            "cartesian" => Ok(ProductKind::Cartesian),
            "tensor" => Ok(ProductKind::Tensor),
            "strong" => Ok(ProductKind::Strong),
            "lexicographic" => Ok(ProductKind::Lexicographic),
            _ => Err(Error::BadParams(format!("unknown product {s:?}"))),
        }
    }
}

/// Product with vertex (i, j) at index i·|V(h)| + j.
pub fn product(g: &Graph, h: &Graph, kind: ProductKind) -> Graph {
    let (n1, n2) = (g.n(), h.n());
    let idx = |i: usize, j: usize| i * n2 + j;
    let mut edges = Vec::new();
    for i in 0..n1 {
        for j in 0..n2 {
            for k in 0..n1 {
                for l in 0..n2 {
                    let (a, b) = (idx(i, j), idx(k, l));
                    if a >= b {
                        continue;
                    }
                    let gi = g.has_edge(i, k);
                    let hj = h.has_edge(j, l);
                    let adj = match kind {
                        ProductKind::Cartesian => (i == k && hj) || (j == l && gi),
                        ProductKind::Tensor => gi && hj,
                        ProductKind::Strong => (i == k && hj) || (j == l && gi) || (gi && hj),
                        ProductKind::Lexicographic => gi || (i == k && hj),
                    };
                    if adj {
                        edges.push((a, b));
                    }
                }
            }
        }
    }
    Graph::from_edges(n1 * n2, edges)
}

/// L(G): vertex j is edge j of `g`.
pub fn line_graph(g: &Graph) -> Graph {
    let es = g.edges();
    let m = es.len();
    let mut edges = Vec::new();
    for v in 0..g.n() {
        let inc: Vec<usize> = g.neighbors(v).iter().map(|&w| g.edge_id(v, w).unwrap()).collect();
        for a in 0..inc.len() {
            for b in a + 1..inc.len() {
                edges.push((inc[a], inc[b]));
            }
        }
    }
    Graph::from_edges(m, edges)
}

/// T(G): vertices of `g` first, then edge j as vertex n + j.
pub fn total_graph(g: &Graph) -> Graph {
    let n = g.n();
    let lg = line_graph(g);
    let edges = g
        .edges()
        .iter()
        .copied()
        .chain(g.edges().iter().enumerate().flat_map(|(j, &(u, v))| [(u, n + j), (v, n + j)]))
        .chain(lg.edges().iter().map(|&(a, b)| (n + a, n + b)));
    Graph::from_edges(n + g.m(), edges)
}

/// μ(G): v_i is i, its shadow u_i is n + i, and w is 2n.
pub fn mycielski(g: &Graph) -> Graph {
    let n = g.n();
    let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
    for &(a, b) in g.edges() {
        edges.push((n + a, b));
        edges.push((a, n + b));
    }
    edges.extend((0..n).map(|i| (n + i, 2 * n)));
    Graph::from_edges(2 * n + 1, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle};

    #[test]
    fn subdivide_triangle() {
        let g = edit(&complete(3), Edit::Subdivide(0, 1)).unwrap();
        assert_eq!((g.n(), g.m()), (4, 4));
        assert!(g.degrees().iter().all(|&d| d == 2));
        assert_eq!(
            edit(&complete(3), Edit::AddEdge(0, 1)),
            Err(Error::AlreadyPresent("edge 0-1".into()))
        );
    }

    #[test]
    fn size_formulas() {
        let (g, h) = (cycle(4), complete(3));
        let (n1, m1, n2, m2) = (4, 4, 3, 3);
        assert_eq!(product(&g, &h, ProductKind::Cartesian).m(), n1 * m2 + m1 * n2);
        assert_eq!(product(&g, &h, ProductKind::Tensor).m(), 2 * m1 * m2);
        assert_eq!(product(&g, &h, ProductKind::Strong).m(), n1 * m2 + m1 * n2 + 2 * m1 * m2);
        assert_eq!(product(&g, &h, ProductKind::Lexicographic).m(), n1 * m2 + m1 * n2 * n2);
        assert_eq!(join(&g, &h).m(), m1 + m2 + n1 * n2);
        assert_eq!(complement(&g).m(), 6 - 4);
    }

    #[test]
    fn contraction_layout() {
        let g = contract_edge(&cycle(4), 0, 1).unwrap();
        assert_eq!((g.n(), g.m()), (3, 3));
        assert_eq!(contract(&complete(5), &[0, 1, 2, 3, 4]).unwrap().n(), 1);
    }
}
