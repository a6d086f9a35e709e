//! Tree characterizations, Prüfer codes, spanning trees and centers.

use crate::error::{cap_check, Error, Result};
use crate::graphcore::Graph;
use crate::linalg::bareiss_det;
use crate::Count;
use serde::Serialize;

/// Largest order for the path-enumeration clause of [`tree_check`].
pub const TREE_CHECK_MAX_N: usize = 10;

/// The five equivalent descriptions of a tree, each evaluated on its own.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeCheck {
    /// Connected and without cycles.
    pub connected_acyclic: bool,
    /// Exactly one simple path between every two vertices.
    pub unique_paths: bool,
    pub connected_n_minus_1: bool,
    pub acyclic_n_minus_1: bool,
    /// Acyclic, and adding any missing edge creates exactly one cycle.
    pub acyclic_one_new_cycle: bool,
}

impl TreeCheck {
    pub fn all_equal(&self) -> bool {
        let v = [
            self.connected_acyclic,
            self.unique_paths,
            self.connected_n_minus_1,
            self.acyclic_n_minus_1,
            self.acyclic_one_new_cycle,
        ];
        v.iter().all(|&x| x == v[0])
    }

    pub fn is_tree(&self) -> bool {
        self.connected_acyclic
    }
}

/// Number of simple u–v paths, stopping once `limit` is reached.
pub fn count_paths(g: &Graph, u: usize, v: usize, limit: usize) -> usize {
    fn go(g: &Graph, x: usize, t: usize, seen: &mut Vec<bool>, count: &mut usize, limit: usize) {
        if x == t {
            *count += 1;
            return;
        }
        for &w in g.neighbors(x) {
            if *count >= limit {
                return;
            }
            if !seen[w] {
                seen[w] = true;
                go(g, w, t, seen, count, limit);
                seen[w] = false;
            }
        }
    }
    let mut seen = vec![false; g.n()];
    seen[u] = true;
    let mut count = 0;
    go(g, u, v, &mut seen, &mut count, limit);
    count
}

/// Number of simple cycles (length ≥ 3), stopping once `limit` is reached.
pub fn count_cycles(g: &Graph, limit: usize) -> usize {
    // each cycle is found from its least vertex in both directions
    fn go(g: &Graph, s: usize, x: usize, len: usize, seen: &mut Vec<bool>, count: &mut usize, cap: usize) {
        for &w in g.neighbors(x) {
            if *count >= cap {
                return;
            }
            if w == s && len >= 3 {
                *count += 1;
            } else if w > s && !seen[w] {
                seen[w] = true;
                go(g, s, w, len + 1, seen, count, cap);
                seen[w] = false;
            }
        }
    }
    let cap = limit.saturating_mul(2);
    let mut count = 0;
    let mut seen = vec![false; g.n()];
    for s in 0..g.n() {
        seen[s] = true;
        go(g, s, s, 1, &mut seen, &mut count, cap);
        seen[s] = false;
    }
    count / 2
}

pub fn tree_check(g: &Graph) -> Result<TreeCheck> {
    let n = g.n();
    cap_check("order for path enumeration", n, TREE_CHECK_MAX_N)?;
    let connected = g.is_connected() && n > 0;
    let acyclic_by_count = count_cycles(g, 1) == 0;
    let unique_paths = (0..n).all(|u| (u + 1..n).all(|v| count_paths(g, u, v, 2) == 1));
    let acyclic_one_new_cycle = acyclic_by_count
        && (0..n).all(|u| {
            (u + 1..n)
                .filter(|&v| !g.has_edge(u, v))
                .all(|v| count_cycles(&g.with_edge(u, v), 2) == 1)
        });
    Ok(TreeCheck {
        connected_acyclic: connected && acyclic_by_count,
        unique_paths,
        connected_n_minus_1: connected && g.m() + 1 == n,
        acyclic_n_minus_1: !g.has_cycle() && g.m() + 1 == n,
        acyclic_one_new_cycle,
    })
}

fn is_tree(g: &Graph) -> bool {
    g.n() > 0 && g.m() + 1 == g.n() && g.is_connected()
}

/// Prüfer code with 1-based labels: repeatedly remove the least leaf and record its neighbour.
pub fn prufer_encode(t: &Graph) -> Result<Vec<usize>> {
    let n = t.n();
    if !is_tree(t) || n < 2 {
        return Err(Error::NotATree);
    }
    let mut deg = t.degrees();
    let mut gone = vec![false; n];
    let mut code = Vec::with_capacity(n - 2);
    for _ in 0..n - 2 {
        let leaf = (0..n).find(|&v| !gone[v] && deg[v] == 1).unwrap();
        let nb = *t.neighbors(leaf).iter().find(|&&w| !gone[w]).unwrap();
        code.push(nb + 1);
        gone[leaf] = true;
        deg[nb] -= 1;
    }
    Ok(code)
}

/// Inverse of [`prufer_encode`]; the code has length n − 2 and entries in 1..=n.
pub fn prufer_decode(code: &[usize], n: usize) -> Result<Graph> {
    if n < 2 || code.len() + 2 != n {
        return Err(Error::BadCode(format!("length {} does not match n = {n}", code.len())));
    }
    if let Some(&x) = code.iter().find(|&&x| x == 0 || x > n) {
        return Err(Error::BadCode(format!("entry {x} outside 1..={n}")));
    }
    let mut deg = vec![1usize; n];
    for &x in code {
        deg[x - 1] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in code {
        let leaf = (0..n).find(|&v| deg[v] == 1).unwrap();
        edges.push((leaf, x - 1));
        deg[leaf] = 0;
        deg[x - 1] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Ok(Graph::from_edges(n, edges))
}

/// Lap(G) = D(G) − A(G).
pub fn laplacian(g: &Graph) -> Vec<Vec<i64>> {
    let n = g.n();
    let mut l = vec![vec![0i64; n]; n];
    for v in 0..n {
        l[v][v] = g.degree(v) as i64;
    }
    for &(u, v) in g.edges() {
        l[u][v] = -1;
        l[v][u] = -1;
    }
    l
}

/// The (i, i) cofactor of the Laplacian, by fraction-free elimination.
pub fn laplacian_cofactor(g: &Graph, i: usize) -> Count {
    let keep: Vec<usize> = (0..g.n()).filter(|&v| v != i).collect();
    let l = laplacian(g);
    let minor: Vec<Vec<Count>> = keep
        .iter()
        .map(|&r| keep.iter().map(|&c| Count::from(l[r][c])).collect())
        .collect();
    bareiss_det(minor)
}

/// Number of spanning trees; zero for a disconnected graph.
pub fn spanning_tree_count(g: &Graph) -> Count {
    if g.n() == 0 {
        return Count::from(0);
    }
    laplacian_cofactor(g, 0)
}

/// Deletes edges lying on cycles, in edge-id order, until only bridges remain.
pub fn spanning_tree(g: &Graph) -> Result<Graph> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut t = g.clone();
    for &(u, v) in g.edges() {
        let h = t.without_edge(u, v);
        if h.is_connected() {
            t = h;
        }
    }
    Ok(t)
}

/// Center of a tree by stripping all leaves at once until at most two vertices remain.
pub fn tree_center(t: &Graph) -> Result<Vec<usize>> {
    if !is_tree(t) {
        return Err(Error::NotATree);
    }
    let n = t.n();
    let mut deg = t.degrees();
    let mut alive: Vec<usize> = (0..n).collect();
    while alive.len() > 2 {
        let leaves: Vec<usize> = alive.iter().copied().filter(|&v| deg[v] <= 1).collect();
        for &l in &leaves {
            for &w in t.neighbors(l) {
                deg[w] = deg[w].saturating_sub(1);
            }
            deg[l] = 0;
        }
        alive.retain(|v| !leaves.contains(v));
    }
    Ok(alive)
}

pub const EMBED_SEARCH_MAX_N: usize = 16;

/// Injective map of the tree `t` into `g` carrying edges to edges.
///
/// When δ(G) ≥ |E(T)| the tree is grown vertex by vertex in BFS order, each new
/// vertex going to the least unused neighbour of its parent's image. Otherwise an
/// exhaustive search decides.
pub fn embed_tree(t: &Graph, g: &Graph) -> Result<Option<Vec<usize>>> {
    if !is_tree(t) {
        return Err(Error::NotATree);
    }
    let k = t.m();
    if t.n() > g.n() {
        return Ok(None);
    }
    let mut order = vec![0usize];
    let mut parent = vec![usize::MAX; t.n()];
    let mut seen = vec![false; t.n()];
    seen[0] = true;
    let mut i = 0;
    while i < order.len() {
        let x = order[i];
        for &y in t.neighbors(x) {
            if !seen[y] {
                seen[y] = true;
                parent[y] = x;
                order.push(y);
            }
        }
        i += 1;
    }
    if g.min_degree() >= k {
        let mut f = vec![usize::MAX; t.n()];
        let mut used = vec![false; g.n()];
        f[0] = 0;
        used[0] = true;
        for &x in &order[1..] {
            let w = *g
                .neighbors(f[parent[x]])
                .iter()
                .find(|&&w| !used[w])
                .expect("minimum degree leaves a free neighbour");
            f[x] = w;
            used[w] = true;
        }
        return Ok(Some(f));
    }
    cap_check("host order for tree embedding search", g.n(), EMBED_SEARCH_MAX_N)?;
    fn go(
        t: &Graph,
        g: &Graph,
        order: &[usize],
        parent: &[usize],
        i: usize,
        f: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if i == order.len() {
            return true;
        }
        let x = order[i];
        let cands: Vec<usize> = if i == 0 {
            (0..g.n()).collect()
        } else {
            g.neighbors(f[parent[x]]).to_vec()
        };
        for w in cands {
            if used[w] || g.degree(w) < t.degree(x) {
                continue;
            }
            f[x] = w;
            used[w] = true;
            if go(t, g, order, parent, i + 1, f, used) {
                return true;
            }
            used[w] = false;
        }
        f[x] = usize::MAX;
        false
    }
    let mut f = vec![usize::MAX; t.n()];
    let mut used = vec![false; g.n()];
    Ok(go(t, g, &order, &parent, 0, &mut f, &mut used).then_some(f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, path};

    #[test]
    fn prufer_star() {
        let star = Graph::from_edges(5, (1..5).map(|i| (0, i)));
        assert_eq!(prufer_encode(&star).unwrap(), vec![1, 1, 1]);
        assert_eq!(prufer_decode(&[1, 1, 1], 5).unwrap(), star);
        assert!(prufer_decode(&[6], 3).is_err());
    }

    #[test]
    fn counts() {
        assert_eq!(spanning_tree_count(&complete(4)), Count::from(16));
        assert_eq!(spanning_tree_count(&cycle(5)), Count::from(5));
        assert_eq!(spanning_tree_count(&Graph::empty(2)), Count::from(0));
    }

    #[test]
    fn centers() {
        assert_eq!(tree_center(&path(5)).unwrap(), vec![2]);
        assert_eq!(tree_center(&path(4)).unwrap(), vec![1, 2]);
    }

    #[test]
    fn five_clauses() {
        let c = tree_check(&cycle(4)).unwrap();
        assert!(c.all_equal() && !c.is_tree());
        let p = tree_check(&path(4)).unwrap();
        assert!(p.all_equal() && p.is_tree());
        assert!(tree_check(&Graph::empty(1)).unwrap().is_tree());
    }
}
