//! Euler trails, cycle decompositions, Hamiltonian search and its sufficient
//! conditions, closure, toughness and brute-force TSP.

use crate::connectivity::{cut_structure, kappa};
use crate::error::{cap_check, Error, Result};
use crate::graphcore::{subsets, Graph};
use crate::matching::independence_number;
use crate::Rational;
use serde::Serialize;
use std::collections::BTreeSet;

/// Order cap for the exact Hamiltonian search.
pub const HAMILTON_MAX_N: usize = 20;
/// Order cap for toughness.
pub const TOUGHNESS_MAX_N: usize = 16;
/// Order cap for brute-force TSP.
pub const TSP_MAX_N: usize = 11;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EulerKind {
    Circuit,
    OpenTrail,
    None,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EulerResult {
    pub kind: EulerKind,
    /// Vertex sequence of the trail (closed for a circuit).
    pub sequence: Vec<usize>,
    /// Edge ids in the order they are used.
    pub edge_order: Vec<usize>,
    pub odd_vertices: Vec<usize>,
    /// The edges do not all lie in one component.
    pub disconnected: bool,
}

/// Non-isolated vertices lie in one component.
fn edges_connected(g: &Graph) -> bool {
    let (label, _) = g.component_labels();
    let mut seen = None;
    (0..g.n()).filter(|&v| g.degree(v) > 0).all(|v| *seen.get_or_insert(label[v]) == label[v])
}

fn reaches(adj: &[BTreeSet<usize>], s: usize, t: usize) -> bool {
    let mut seen = vec![false; adj.len()];
    seen[s] = true;
    let mut stack = vec![s];
    while let Some(x) = stack.pop() {
        if x == t {
            return true;
        }
        for &y in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    false
}

/// Edge xw is a bridge of the remaining graph.
fn is_bridge(adj: &mut [BTreeSet<usize>], x: usize, w: usize) -> bool {
    adj[x].remove(&w);
    adj[w].remove(&x);
    let bridge = !reaches(adj, x, w);
    adj[x].insert(w);
    adj[w].insert(x);
    bridge
}

/// Fleury: from the current vertex take the least neighbour whose edge is not
/// a bridge of the remaining graph, unless no other edge is left.
pub fn euler(g: &Graph) -> EulerResult {
    let odd: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) % 2 == 1).collect();
    let connected = edges_connected(g);
    let kind = match (connected, odd.len()) {
        (true, 0) => EulerKind::Circuit,
        (true, 2) => EulerKind::OpenTrail,
        _ => EulerKind::None,
    };
    let mut out = EulerResult {
        kind,
        sequence: Vec::new(),
        edge_order: Vec::new(),
        odd_vertices: odd.clone(),
        disconnected: !connected,
    };
    if kind == EulerKind::None || g.m() == 0 {
        return out;
    }
    let start = odd.first().copied().unwrap_or_else(|| (0..g.n()).find(|&v| g.degree(v) > 0).unwrap());
    let mut adj: Vec<BTreeSet<usize>> = (0..g.n()).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut x = start;
    out.sequence.push(x);
    while !adj[x].is_empty() {
        let cands: Vec<usize> = adj[x].iter().copied().collect();
        let w = if cands.len() == 1 {
            cands[0]
        } else {
            *cands
                .iter()
                .find(|&&w| !is_bridge(&mut adj, x, w))
                .expect("some edge at a vertex of degree ≥ 2 is not a bridge")
        };
        adj[x].remove(&w);
        adj[w].remove(&x);
        out.edge_order.push(g.edge_id(x, w).unwrap());
        out.sequence.push(w);
        x = w;
    }
    out
}

/// Whether `walk` could be produced by Fleury's rule: every step uses an
/// unused edge, and a bridge of the remaining graph only when it is the last
/// edge at the current vertex. The walk must use every edge.
pub fn fleury_admissible(g: &Graph, walk: &[usize]) -> bool {
    if walk.is_empty() || walk.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let mut adj: Vec<BTreeSet<usize>> = (0..g.n()).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    for w in walk.windows(2) {
        let (x, y) = (w[0], w[1]);
        if !adj[x].contains(&y) {
            return false;
        }
        if adj[x].len() > 1 && is_bridge(&mut adj, x, y) {
            return false;
        }
        adj[x].remove(&y);
        adj[y].remove(&x);
    }
    adj.iter().all(|a| a.is_empty())
}

/// Closed trail through every edge of the component of `start`, by splicing
/// sub-circuits; the graph is assumed even on that component.
pub fn hierholzer(g: &Graph, start: usize) -> Vec<usize> {
    let mut used = vec![false; g.m()];
    let mut next = vec![0usize; g.n()];
    let mut stack = vec![start];
    let mut circuit = Vec::new();
    while let Some(&x) = stack.last() {
        let nb = g.neighbors(x);
        while next[x] < nb.len() && used[g.edge_id(x, nb[next[x]]).unwrap()] {
            next[x] += 1;
        }
        if next[x] == nb.len() {
            circuit.push(x);
            stack.pop();
        } else {
            let y = nb[next[x]];
            used[g.edge_id(x, y).unwrap()] = true;
            stack.push(y);
        }
    }
    circuit.reverse();
    circuit
}

/// Edge-disjoint simple cycles covering E(G), or None if some degree is odd.
///
/// Repeatedly walks from the least vertex of positive degree until a vertex
/// repeats and removes the cycle closed there.
pub fn cycle_decomposition(g: &Graph) -> Option<Vec<Vec<usize>>> {
    if (0..g.n()).any(|v| g.degree(v) % 2 == 1) {
        return None;
    }
    let mut adj: Vec<BTreeSet<usize>> = (0..g.n()).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut cycles = Vec::new();
    while let Some(s) = (0..g.n()).find(|&v| !adj[v].is_empty()) {
        let mut walk = vec![s];
        let mut pos = vec![usize::MAX; g.n()];
        pos[s] = 0;
        let mut prev = usize::MAX;
        loop {
            let x = *walk.last().unwrap();
            let y = *adj[x].iter().find(|&&y| y != prev).unwrap();
            if pos[y] != usize::MAX {
                let cycle: Vec<usize> = walk[pos[y]..].to_vec();
                for i in 0..cycle.len() {
                    let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
                    adj[a].remove(&b);
                    adj[b].remove(&a);
                }
                cycles.push(cycle);
                break;
            }
            pos[y] = walk.len();
            walk.push(y);
            prev = x;
        }
    }
    Some(cycles)
}

/// Bitmask reachability: `ends[mask]` holds the possible last vertices of a
/// path covering exactly `mask`, starting at `start` or anywhere.
fn path_table(g: &Graph, start: Option<usize>) -> Vec<u32> {
    let n = g.n();
    let adj = g.masks();
    let mut ends = vec![0u32; 1 << n];
    match start {
        Some(s) => ends[1 << s] = 1 << s,
        None => (0..n).for_each(|v| ends[1 << v] = 1 << v),
    }
    for mask in 1usize..1 << n {
        let e = ends[mask];
        if e == 0 {
            continue;
        }
        for v in 0..n {
            if e >> v & 1 == 1 {
                let mut out = adj[v] as usize & !mask;
                while out != 0 {
                    let w = out.trailing_zeros() as usize;
                    out &= out - 1;
                    ends[mask | 1 << w] |= 1 << w;
                }
            }
        }
    }
    ends
}

/// Walks back through the table from `last`, preferring the least predecessor.
fn unwind(g: &Graph, ends: &[u32], mut mask: usize, mut last: usize) -> Vec<usize> {
    let adj = g.masks();
    let mut path = vec![last];
    while mask.count_ones() > 1 {
        let prev_mask = mask & !(1 << last);
        let cand = ends[prev_mask] & adj[last] as u32;
        let p = cand.trailing_zeros() as usize;
        path.push(p);
        mask = prev_mask;
        last = p;
    }
    path.reverse();
    path
}

/// Hamiltonian cycle starting at vertex 0, if any (n ≥ 3).
pub fn hamiltonian_cycle(g: &Graph) -> Result<Option<Vec<usize>>> {
    let n = g.n();
    cap_check("order for Hamiltonian search", n, HAMILTON_MAX_N)?;
    if n < 3 {
        return Ok(None);
    }
    let ends = path_table(g, Some(0));
    let full = (1usize << n) - 1;
    let closing = ends[full] & g.masks()[0] as u32;
    if closing == 0 {
        return Ok(None);
    }
    Ok(Some(unwind(g, &ends, full, closing.trailing_zeros() as usize)))
}

/// Hamiltonian path, if any.
pub fn hamiltonian_path(g: &Graph) -> Result<Option<Vec<usize>>> {
    let n = g.n();
    cap_check("order for Hamiltonian search", n, HAMILTON_MAX_N)?;
    if n == 0 {
        return Ok(None);
    }
    let ends = path_table(g, None);
    let full = (1usize << n) - 1;
    if ends[full] == 0 {
        return Ok(None);
    }
    Ok(Some(unwind(g, &ends, full, ends[full].trailing_zeros() as usize)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Toughness {
    /// Complete graphs: no S leaves two components.
    Infinite,
    Finite {
        /// Reduced fraction "p/q".
        value: String,
        set: Vec<usize>,
        components: usize,
    },
}

impl Toughness {
    pub fn value(&self) -> Option<Rational> {
        match self {
            Toughness::Infinite => None,
            Toughness::Finite { value, .. } => Some(value.parse().unwrap()),
        }
    }
}

/// τ(G) = min |S| / c(G − S) over S with c(G − S) ≥ 2.
pub fn toughness(g: &Graph) -> Result<Toughness> {
    let n = g.n();
    cap_check("order for toughness", n, TOUGHNESS_MAX_N)?;
    let mut best: Option<(Rational, Vec<usize>, usize)> = None;
    for k in 0..n {
        for s in subsets(n, k) {
            let mask = s.iter().fold(0u64, |m, &v| m | 1 << v);
            let c = g.components_without_mask(mask);
            if c < 2 {
                continue;
            }
            let r = Rational::new(k as i64, c as i64);
            if best.as_ref().is_none_or(|b| r < b.0) {
                best = Some((r, s, c));
            }
        }
    }
    Ok(match best {
        None => Toughness::Infinite,
        Some((r, set, components)) => Toughness::Finite {
            value: format!("{}/{}", r.numer(), r.denom()),
            set,
            components,
        },
    })
}

/// Repeatedly joins non-adjacent pairs whose degree sum is at least n,
/// scanning pairs in the given order until none qualifies.
pub fn closure_in_order(g: &Graph, order: &[(usize, usize)]) -> Graph {
    let n = g.n();
    let mut adj = vec![vec![false; n]; n];
    let mut deg = g.degrees();
    for &(u, v) in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    loop {
        let mut changed = false;
        for &(u, v) in order {
            if u != v && !adj[u][v] && deg[u] + deg[v] >= n {
                adj[u][v] = true;
                adj[v][u] = true;
                deg[u] += 1;
                deg[v] += 1;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| adj[u][v]))
}

/// cl(G) with pairs scanned in lexicographic order.
pub fn closure(g: &Graph) -> Graph {
    let n = g.n();
    let order: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    closure_in_order(g, &order)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HamiltonReport {
    pub cycle: Option<Vec<usize>>,
    pub path: Option<Vec<usize>>,
    /// The exact search ran (the order was within the cap).
    pub searched: bool,
    pub dirac: bool,
    pub ore: bool,
    pub chvatal_degrees: bool,
    pub chvatal_erdos: bool,
    pub goodman_hedetniemi: bool,
    pub ore_path: bool,
    pub chvatal_erdos_path: bool,
    pub closure_complete: bool,
    /// None above the toughness cap.
    pub toughness: Option<Toughness>,
}

impl HamiltonReport {
    /// Every flagged sufficient condition is matched by a found cycle or path.
    pub fn flags_consistent(&self) -> bool {
        let cycle_flag =
            self.dirac || self.ore || self.chvatal_degrees || self.chvatal_erdos || self.goodman_hedetniemi || self.closure_complete;
        let path_flag = self.ore_path || self.chvatal_erdos_path;
        !self.searched || ((!cycle_flag || self.cycle.is_some()) && (!path_flag || self.path.is_some()))
    }
}

fn nonadjacent_pairs_sum_at_least(g: &Graph, bound: usize) -> bool {
    let n = g.n();
    (0..n).all(|u| (u + 1..n).all(|v| g.has_edge(u, v) || g.degree(u) + g.degree(v) >= bound))
}

/// No induced K_{1,3} and no induced K_{1,3} + e.
fn claw_and_paw_free(g: &Graph) -> bool {
    subsets(g.n(), 4).all(|s| {
        let h = g.induced(&s);
        let mut d = h.degrees();
        d.sort_unstable();
        d != [1, 1, 1, 3] && d != [1, 2, 2, 3]
    })
}

/// Chvátal's degree condition: for i < n/2, d_i > i or d_{n−i} ≥ n − i.
fn chvatal_condition(g: &Graph) -> bool {
    let n = g.n();
    let mut d = g.degrees();
    d.sort_unstable();
    // d[i - 1] is d_i in 1-based terms
    n >= 3 && (1..n).take_while(|&i| 2 * i < n).all(|i| d[i - 1] > i || d[n - i - 1] >= n - i)
}

pub fn hamilton(g: &Graph) -> Result<HamiltonReport> {
    let n = g.n();
    let searched = n <= HAMILTON_MAX_N;
    let (cycle, path) = if searched {
        (hamiltonian_cycle(g)?, hamiltonian_path(g)?)
    } else {
        (None, None)
    };
    let alpha = independence_number(g).ok();
    let k = kappa(g);
    let two_connected = n >= 3 && g.is_connected() && cut_structure(g).cut_vertices.is_empty();
    Ok(HamiltonReport {
        cycle,
        path,
        searched,
        dirac: n >= 3 && 2 * g.min_degree() >= n,
        ore: n >= 3 && nonadjacent_pairs_sum_at_least(g, n),
        chvatal_degrees: chvatal_condition(g),
        chvatal_erdos: n >= 3 && alpha.is_some_and(|a| a <= k),
        goodman_hedetniemi: two_connected && claw_and_paw_free(g),
        ore_path: n >= 1 && nonadjacent_pairs_sum_at_least(g, n.saturating_sub(1)),
        chvatal_erdos_path: n >= 1 && alpha.is_some_and(|a| a <= k + 1),
        closure_complete: n >= 3 && closure(g).is_complete(),
        toughness: (n <= TOUGHNESS_MAX_N).then(|| toughness(g)).transpose()?,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Tour {
    /// Starts at 0; the return to 0 is implied.
    pub tour: Vec<usize>,
    pub length: i64,
}

/// Optimal tour by enumerating the (n − 1)! orders with vertex 0 fixed; ties
/// go to the lexicographically least tour.
pub fn tsp_bruteforce(w: &[Vec<i64>]) -> Result<Tour> {
    let n = w.len();
    cap_check("order for brute-force TSP", n, TSP_MAX_N)?;
    if n == 0 {
        return Err(Error::EmptySet);
    }
    if w.iter().any(|r| r.len() != n) || (0..n).any(|i| (0..n).any(|j| w[i][j] != w[j][i])) {
        return Err(Error::BadParams("weights must form a symmetric square matrix".into()));
    }
    let mut rest: Vec<usize> = (1..n).collect();
    let cost = |r: &[usize]| -> i64 {
        let mut t = 0;
        let mut prev = 0;
        for &x in r {
            t += w[prev][x];
            prev = x;
        }
        t + w[prev][0]
    };
    let mut best = Tour {
        tour: std::iter::once(0).chain(rest.iter().copied()).collect(),
        length: if n == 1 { 0 } else { cost(&rest) },
    };
    while next_permutation(&mut rest) {
        let c = cost(&rest);
        if c < best.length {
            best = Tour {
                tour: std::iter::once(0).chain(rest.iter().copied()).collect(),
                length: c,
            };
        }
    }
    Ok(best)
}

fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, complete_bipartite, cycle, path, petersen};

    #[test]
    fn euler_kinds() {
        assert_eq!(euler(&complete(4)).kind, EulerKind::None);
        let c = euler(&cycle(5));
        assert_eq!((c.kind, c.sequence.len()), (EulerKind::Circuit, 6));
        assert_eq!(euler(&path(4)).kind, EulerKind::OpenTrail);
    }

    #[test]
    fn veblen_k5() {
        let cs = cycle_decomposition(&complete(5)).unwrap();
        assert_eq!(cs.iter().map(|c| c.len()).sum::<usize>(), 10);
        assert!(cycle_decomposition(&path(3)).is_none());
    }

    #[test]
    fn petersen_hamilton() {
        let r = hamilton(&petersen()).unwrap();
        assert!(r.cycle.is_none() && r.path.is_some());
        assert_eq!(r.toughness.unwrap().value(), Some(Rational::new(4, 3)));
        assert!(!hamilton(&complete_bipartite(3, 4)).unwrap().cycle.is_some());
    }

    #[test]
    fn tsp_small() {
        let w = vec![vec![0, 1, 2, 1], vec![1, 0, 1, 2], vec![2, 1, 0, 1], vec![1, 2, 1, 0]];
        let t = tsp_bruteforce(&w).unwrap();
        assert_eq!((t.tour, t.length), (vec![0, 1, 2, 3], 4));
    }
}
