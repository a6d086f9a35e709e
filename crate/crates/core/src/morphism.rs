//! Isomorphisms, homomorphisms and automorphisms by exhaustive search.

use crate::error::{cap_check, Error, Result};
use crate::graphcore::Graph;
use serde::Serialize;

/// Default order cap for the exhaustive searches.
pub const DEFAULT_CAP: usize = 10;
/// Largest automorphism group that is listed element by element.
pub const AUT_LIST_CAP: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MapKind {
    Isomorphism,
    Homomorphism,
    Automorphism,
}

/// Vertex `i` of the source goes to `map[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexMap {
    pub kind: MapKind,
    pub map: Vec<usize>,
}

pub fn is_isomorphism(g: &Graph, h: &Graph, f: &[usize]) -> bool {
    if g.n() != h.n() || g.m() != h.m() || f.len() != g.n() {
        return false;
    }
    let mut seen = vec![false; h.n()];
    for &x in f {
        if x >= h.n() || std::mem::replace(&mut seen[x], true) {
            return false;
        }
    }
    (0..g.n()).all(|u| (u + 1..g.n()).all(|v| g.has_edge(u, v) == h.has_edge(f[u], f[v])))
}

pub fn is_homomorphism(g: &Graph, h: &Graph, f: &[usize]) -> bool {
    f.len() == g.n() && g.edges().iter().all(|&(u, v)| h.has_edge(f[u], f[v]))
}

fn triangles(g: &Graph) -> usize {
    g.edges()
        .iter()
        .map(|&(u, v)| {
            g.neighbors(u)
                .iter()
                .filter(|&&w| w > v && g.has_edge(v, w))
                .count()
        })
        .sum()
}

fn invariant(g: &Graph, v: usize) -> (usize, Vec<usize>) {
    let mut nd: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
    nd.sort_unstable();
    (g.degree(v), nd)
}

struct IsoSearch<'a> {
    g: &'a Graph,
    h: &'a Graph,
    inv_g: Vec<(usize, Vec<usize>)>,
    inv_h: Vec<(usize, Vec<usize>)>,
    map: Vec<usize>,
    used: Vec<bool>,
    order: Vec<usize>,
}

impl<'a> IsoSearch<'a> {
    fn new(g: &'a Graph, h: &'a Graph) -> Self {
        IsoSearch {
            g,
            h,
            inv_g: (0..g.n()).map(|v| invariant(g, v)).collect(),
            inv_h: (0..h.n()).map(|v| invariant(h, v)).collect(),
            map: vec![usize::MAX; g.n()],
            used: vec![false; h.n()],
            order: (0..g.n()).collect(),
        }
    }

    fn fits(&self, v: usize, x: usize) -> bool {
        !self.used[x]
            && self.inv_g[v] == self.inv_h[x]
            && (0..self.g.n()).all(|u| {
                self.map[u] == usize::MAX || self.g.has_edge(u, v) == self.h.has_edge(self.map[u], x)
            })
    }

    fn assign(&mut self, v: usize, x: usize) {
        self.map[v] = x;
        self.used[x] = true;
    }

    fn unassign(&mut self, v: usize) {
        self.used[self.map[v]] = false;
        self.map[v] = usize::MAX;
    }

    /// Visits complete maps in lexicographic order; stops when `visit` returns false.
    fn run(&mut self, depth: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if depth == self.order.len() {
            return visit(&self.map);
        }
        let v = self.order[depth];
        if self.map[v] != usize::MAX {
            return self.run(depth + 1, visit);
        }
        for x in 0..self.h.n() {
            if self.fits(v, x) {
                self.assign(v, x);
                let go_on = self.run(depth + 1, visit);
                self.unassign(v);
                if !go_on {
                    return false;
                }
            }
        }
        true
    }

    /// Pins `v -> x` before the search; false if the pin is inconsistent.
    fn pin(&mut self, v: usize, x: usize) -> bool {
        if self.map[v] == x {
            return true;
        }
        if self.map[v] != usize::MAX || !self.fits(v, x) {
            return false;
        }
        self.assign(v, x);
        true
    }
}

fn cheap_mismatch(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.m() != h.m() {
        return true;
    }
    let (mut dg, mut dh) = (g.degrees(), h.degrees());
    dg.sort_unstable();
    dh.sort_unstable();
    dg != dh || triangles(g) != triangles(h)
}

/// Lexicographically least isomorphism g → h, if any.
pub fn isomorphic(g: &Graph, h: &Graph, cap: usize) -> Result<Option<VertexMap>> {
    cap_check("order for isomorphism search", g.n().max(h.n()), cap)?;
    if cheap_mismatch(g, h) {
        return Ok(None);
    }
    let mut s = IsoSearch::new(g, h);
    let mut found = None;
    s.run(0, &mut |m| {
        found = Some(m.to_vec());
        false
    });
    Ok(found.map(|map| VertexMap {
        kind: MapKind::Isomorphism,
        map,
    }))
}

/// Some homomorphism g → h (the lexicographically least one).
pub fn homomorphism(g: &Graph, h: &Graph, cap: usize) -> Result<Option<VertexMap>> {
    cap_check("order for homomorphism search", g.n(), cap)?;
    fn go(g: &Graph, h: &Graph, v: usize, f: &mut Vec<usize>) -> bool {
        if v == g.n() {
            return true;
        }
        for x in 0..h.n() {
            if g.neighbors(v)
                .iter()
                .filter(|&&u| u < v)
                .all(|&u| h.has_edge(f[u], x))
            {
                f.push(x);
                if go(g, h, v + 1, f) {
                    return true;
                }
                f.pop();
            }
        }
        false
    }
    let mut f = Vec::with_capacity(g.n());
    Ok(go(g, h, 0, &mut f).then_some(VertexMap {
        kind: MapKind::Homomorphism,
        map: f,
    }))
}

/// All automorphisms in lexicographic order; the identity comes first.
pub fn automorphisms(g: &Graph, cap: usize) -> Result<Vec<VertexMap>> {
    cap_check("order for automorphism search", g.n(), cap)?;
    let mut s = IsoSearch::new(g, g);
    let mut out = Vec::new();
    let mut overflow = false;
    s.run(0, &mut |m| {
        if out.len() == AUT_LIST_CAP {
            overflow = true;
            return false;
        }
        out.push(VertexMap {
            kind: MapKind::Automorphism,
            map: m.to_vec(),
        });
        true
    });
    if overflow {
        return Err(Error::CapExceeded {
            what: "automorphism group size",
            cap: AUT_LIST_CAP,
        });
    }
    Ok(out)
}

/// Some automorphism sending each `v` to `x` for the listed pins.
pub fn automorphism_with(g: &Graph, pins: &[(usize, usize)]) -> Option<Vec<usize>> {
    let mut s = IsoSearch::new(g, g);
    for &(v, x) in pins {
        if !s.pin(v, x) {
            return None;
        }
    }
    let mut found = None;
    s.run(0, &mut |m| {
        found = Some(m.to_vec());
        false
    });
    found
}

/// Identity, inverses and closure under composition.
pub fn is_group(perms: &[Vec<usize>]) -> bool {
    use std::collections::HashSet;
    let Some(first) = perms.first() else {
        return false;
    };
    let n = first.len();
    let set: HashSet<&Vec<usize>> = perms.iter().collect();
    let id: Vec<usize> = (0..n).collect();
    if !set.contains(&id) {
        return false;
    }
    perms.iter().all(|p| {
        let mut inv = vec![0; n];
        for (i, &x) in p.iter().enumerate() {
            inv[x] = i;
        }
        set.contains(&inv)
            && perms
                .iter()
                .all(|q| set.contains(&(0..n).map(|i| p[q[i]]).collect::<Vec<_>>()))
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Transitivity {
    pub vertex_transitive: bool,
    pub edge_transitive: bool,
    pub asymmetric: bool,
    pub vertex_orbits: Vec<Vec<usize>>,
    /// Orbits of edge ids.
    pub edge_orbits: Vec<Vec<usize>>,
}

fn orbits(k: usize, same: impl Fn(usize, usize) -> bool) -> Vec<Vec<usize>> {
    let mut rep = vec![usize::MAX; k];
    let mut out: Vec<Vec<usize>> = Vec::new();
    for a in 0..k {
        if rep[a] != usize::MAX {
            continue;
        }
        rep[a] = out.len();
        let mut orbit = vec![a];
        for b in a + 1..k {
            if rep[b] == usize::MAX && same(a, b) {
                rep[b] = rep[a];
                orbit.push(b);
            }
        }
        out.push(orbit);
    }
    out
}

/// Orbit partitions of vertices and edges under Aut(G).
pub fn transitivity(g: &Graph, cap: usize) -> Result<Transitivity> {
    cap_check("order for automorphism search", g.n(), cap)?;
    let vertex_orbits = orbits(g.n(), |a, b| automorphism_with(g, &[(a, b)]).is_some());
    let es = g.edges();
    let edge_orbits = orbits(es.len(), |a, b| {
        let (u, v) = es[a];
        let (x, y) = es[b];
        automorphism_with(g, &[(u, x), (v, y)]).is_some()
            || automorphism_with(g, &[(u, y), (v, x)]).is_some()
    });
    let mut count = 0;
    IsoSearch::new(g, g).run(0, &mut |_| {
        count += 1;
        count < 2
    });
    Ok(Transitivity {
        vertex_transitive: vertex_orbits.len() <= 1,
        edge_transitive: edge_orbits.len() <= 1,
        asymmetric: count == 1,
        vertex_orbits,
        edge_orbits,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, path};

    #[test]
    fn group_sizes() {
        assert_eq!(automorphisms(&complete(3), 10).unwrap().len(), 6);
        assert_eq!(automorphisms(&path(3), 10).unwrap().len(), 2);
        assert_eq!(automorphisms(&cycle(6), 10).unwrap().len(), 12);
        let auts: Vec<Vec<usize>> = automorphisms(&cycle(5), 10).unwrap().into_iter().map(|m| m.map).collect();
        assert!(is_group(&auts));
    }

    #[test]
    fn c5_not_bipartite_hom() {
        assert!(homomorphism(&cycle(5), &complete(2), 10).unwrap().is_none());
        assert!(homomorphism(&cycle(5), &complete(3), 10).unwrap().is_some());
    }

    #[test]
    fn cap_enforced() {
        assert!(isomorphic(&complete(11), &complete(11), 10).unwrap_err().is_cap());
    }
}
