//! Exhaustive graph generation for small orders.

use super::Graph;
use crate::error::{cap_check, Result};
use std::collections::BTreeMap;

/// Largest order accepted by [`canonical_form`].
pub const CANON_MAX_N: usize = 16;
/// Largest order accepted by [`nonisomorphic_graphs`].
pub const NONISO_MAX_N: usize = 8;

/// Canonical code and the labelling that achieves it.
///
/// The code is the upper triangle of the relabelled adjacency matrix read row by
/// row; the maximum over all labellings reachable by individualisation and
/// refinement is taken, so two graphs are isomorphic exactly when their codes agree.
pub fn canonical_form(g: &Graph) -> (u128, Vec<usize>) {
    let n = g.n();
    assert!(n <= CANON_MAX_N, "canonical form needs n <= {CANON_MAX_N}");
    if n == 0 {
        return (0, Vec::new());
    }
    let masks = g.masks();
    let mut best = None;
    search(&masks, vec![(0..n).collect()], &mut best);
    best.unwrap()
}

/// `g` relabelled by its canonical labelling.
pub fn canonical_graph(g: &Graph) -> Graph {
    let (_, order) = canonical_form(g);
    relabel_by_order(g, &order)
}

/// Vertex `order[i]` of `g` becomes vertex `i`.
pub fn relabel_by_order(g: &Graph, order: &[usize]) -> Graph {
    let mut pos = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    Graph::from_edges(g.n(), g.edges().iter().map(|&(u, v)| (pos[u], pos[v])))
}

fn code_of(masks: &[u64], order: &[usize]) -> u128 {
    let mut code = 0u128;
    for i in 0..order.len() {
        for j in i + 1..order.len() {
            code = code << 1 | u128::from(masks[order[i]] >> order[j] & 1);
        }
    }
    code
}

fn refine(masks: &[u64], cells: &mut Vec<Vec<usize>>) {
    loop {
        let cm: Vec<u64> = cells
            .iter()
            .map(|c| c.iter().fold(0, |a, &v| a | 1 << v))
            .collect();
        let mut next = Vec::with_capacity(cells.len());
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| (cm.iter().map(|c| (masks[v] & c).count_ones()).collect(), v))
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|x| x.1).collect());
                    start = i;
                }
            }
        }
        let done = next.len() == cells.len();
        *cells = next;
        if done {
            return;
        }
    }
}

fn twins(masks: &[u64], cell: &[usize]) -> bool {
    let open = |v: usize| masks[v] & !(1u64 << v);
    let closed = |v: usize| masks[v] | 1u64 << v;
    cell.iter().all(|&v| open(v) == open(cell[0])) || cell.iter().all(|&v| closed(v) == closed(cell[0]))
}

fn search(masks: &[u64], mut cells: Vec<Vec<usize>>, best: &mut Option<(u128, Vec<usize>)>) {
    refine(masks, &mut cells);
    let Some(t) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let code = code_of(masks, &order);
        if best.as_ref().is_none_or(|b| code > b.0) {
            *best = Some((code, order));
        }
        return;
    };
    // swapping twins is an automorphism fixing the partition, so one branch suffices
    let cands: Vec<usize> = if twins(masks, &cells[t]) {
        vec![cells[t][0]]
    } else {
        cells[t].clone()
    };
    for v in cands {
        let mut next = cells.clone();
        let rest: Vec<usize> = next[t].iter().copied().filter(|&x| x != v).collect();
        next[t] = vec![v];
        next.insert(t + 1, rest);
        search(masks, next, best);
    }
}

/// One representative of every isomorphism class of graphs on `n` vertices,
/// each in canonical labelling, ordered by edge count and then canonical code.
pub fn nonisomorphic_graphs(n: usize) -> Result<Vec<Graph>> {
    cap_check("order for exhaustive generation", n, NONISO_MAX_N)?;
    let mut level = vec![Graph::empty(n.min(1))];
    for k in 2..=n {
        let mut seen: BTreeMap<(usize, u128), Graph> = BTreeMap::new();
        for g in &level {
            for s in 0u64..1 << (k - 1) {
                let extra = (0..k - 1).filter(|&v| s >> v & 1 == 1).map(|v| (v, k - 1));
                let h = Graph::from_edges(k, g.edges().iter().copied().chain(extra));
                let (code, order) = canonical_form(&h);
                seen.entry((h.m(), code))
                    .or_insert_with(|| relabel_by_order(&h, &order));
            }
        }
        level = seen.into_values().collect();
    }
    Ok(level)
}

/// Every labelled graph on `n` vertices (there are 2^(n choose 2)); `n <= 6`.
pub fn labeled_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    cap_check("order for labelled enumeration", n, 6)?;
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let total = 1u64 << pairs.len();
    Ok((0..total).map(move |mask| {
        Graph::from_edges(
            n,
            pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e),
        )
    }))
}
