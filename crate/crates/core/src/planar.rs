//! Planarity and outerplanarity with Kuratowski and Wagner witnesses, face
//! tracing on rotation systems, genus formulas and crossing-number tools.
//!
//! The verdict comes from a face-by-face embedding of each block; witnesses
//! are extracted and checked separately. This is a desk-scale verifier, not a
//! linear-time tester.

use crate::error::{cap_check, Error, Result};
use crate::graphcore::Graph;
use crate::transform::join;
use serde::Serialize;

/// Largest connected component searched for minor witnesses.
pub const MINOR_MAX_N: usize = 12;

const NONE: usize = usize::MAX;

/// Edge lists of the biconnected blocks.
pub fn blocks(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    let n = g.n();
    let mut disc = vec![NONE; n];
    let mut low = vec![0; n];
    let mut t = 0;
    let mut estack: Vec<(usize, usize)> = Vec::new();
    let mut out = Vec::new();
    for root in 0..n {
        if disc[root] != NONE {
            continue;
        }
        disc[root] = t;
        low[root] = t;
        t += 1;
        let mut stack = vec![(root, NONE, 0usize)];
        while let Some(top) = stack.last_mut() {
            let (v, p, i) = *top;
            if i < g.degree(v) {
                top.2 += 1;
                let w = g.neighbors(v)[i];
                if disc[w] == NONE {
                    estack.push((v, w));
                    disc[w] = t;
                    low[w] = t;
                    t += 1;
                    stack.push((w, v, 0));
                } else if w != p && disc[w] < disc[v] {
                    estack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if p != NONE {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        let mut block = Vec::new();
                        while let Some(e) = estack.pop() {
                            block.push((e.0.min(e.1), e.0.max(e.1)));
                            if e == (p, v) {
                                break;
                            }
                        }
                        block.sort_unstable();
                        out.push(block);
                    }
                }
            }
        }
    }
    out
}

/// Face-by-face embedding of a 2-connected graph with at least three vertices.
fn dmp_block(b: &Graph) -> bool {
    let n = b.n();
    if b.m() > 3 * n - 6 {
        return false;
    }
    let (a0, b0) = b.edges()[0];
    let cycle = b.without_edge(a0, b0).shortest_path(b0, a0).expect("blocks are 2-connected");
    let mut in_h = vec![false; n];
    let mut h_edge = vec![false; b.m()];
    for i in 0..cycle.len() {
        let (x, y) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        in_h[x] = true;
        h_edge[b.edge_id(x, y).unwrap()] = true;
    }
    let mut faces = vec![cycle.clone(), cycle];
    loop {
        // fragments: (attachments, path between two of them)
        let mut frags: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
        for (id, &(x, y)) in b.edges().iter().enumerate() {
            if !h_edge[id] && in_h[x] && in_h[y] {
                frags.push((vec![x, y], vec![x, y]));
            }
        }
        let mut seen = vec![false; n];
        for s in 0..n {
            if in_h[s] || seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut att = Vec::new();
            let mut i = 0;
            while i < comp.len() {
                for &w in b.neighbors(comp[i]) {
                    if in_h[w] {
                        att.push(w);
                    } else if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
                i += 1;
            }
            att.sort_unstable();
            att.dedup();
            let path = fragment_path(b, &in_h, &comp, att[0], att[1]);
            frags.push((att, path));
        }
        if frags.is_empty() {
            return true;
        }
        let admissible: Vec<Vec<usize>> = frags
            .iter()
            .map(|(att, _)| (0..faces.len()).filter(|&f| att.iter().all(|a| faces[f].contains(a))).collect())
            .collect();
        if admissible.iter().any(|a| a.is_empty()) {
            return false;
        }
        let pick = admissible.iter().position(|a| a.len() == 1).unwrap_or(0);
        let f = admissible[pick][0];
        let path = &frags[pick].1;
        let face = faces.swap_remove(f);
        let (i, j) = (
            face.iter().position(|&x| x == path[0]).unwrap(),
            face.iter().position(|&x| x == *path.last().unwrap()).unwrap(),
        );
        let k = face.len();
        let inner = &path[1..path.len() - 1];
        let mut f1: Vec<usize> = (0..).map(|s| face[(i + s) % k]).take((j + k - i) % k + 1).collect();
        f1.extend(inner.iter().rev());
        let mut f2: Vec<usize> = (0..).map(|s| face[(j + s) % k]).take((i + k - j) % k + 1).collect();
        f2.extend(inner.iter());
        faces.push(f1);
        faces.push(f2);
        for w in path.windows(2) {
            in_h[w[0]] = true;
            in_h[w[1]] = true;
            h_edge[b.edge_id(w[0], w[1]).unwrap()] = true;
        }
    }
}

/// Path a → b through the fragment component `comp`.
fn fragment_path(b: &Graph, in_h: &[bool], comp: &[usize], from: usize, to: usize) -> Vec<usize> {
    let mut in_comp = vec![false; b.n()];
    for &v in comp {
        in_comp[v] = true;
    }
    let mut prev = vec![NONE; b.n()];
    let mut queue = std::collections::VecDeque::new();
    for &w in b.neighbors(from) {
        if in_comp[w] && prev[w] == NONE {
            prev[w] = from;
            queue.push_back(w);
        }
    }
    let mut last = NONE;
    while let Some(v) = queue.pop_front() {
        if b.has_edge(v, to) {
            last = v;
            break;
        }
        for &w in b.neighbors(v) {
            if in_comp[w] && !in_h[w] && prev[w] == NONE {
                prev[w] = v;
                queue.push_back(w);
            }
        }
    }
    let mut path = vec![to];
    let mut v = last;
    while v != from {
        path.push(v);
        v = prev[v];
    }
    path.push(from);
    path.reverse();
    path
}

/// Planarity verdict for any order, block by block.
pub fn is_planar(g: &Graph) -> bool {
    let n = g.n();
    if n >= 3 && g.m() > 3 * n - 6 {
        return false;
    }
    blocks(g).iter().all(|block| {
        if block.len() < 3 {
            return true;
        }
        let mut vs: Vec<usize> = block.iter().flat_map(|&(u, v)| [u, v]).collect();
        vs.sort_unstable();
        vs.dedup();
        let idx = |x: usize| vs.binary_search(&x).unwrap();
        let b = Graph::from_edges(vs.len(), block.iter().map(|&(u, v)| (idx(u), idx(v))));
        dmp_block(&b)
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Pattern {
    K5,
    K33,
    K4,
    K23,
}

impl Pattern {
    fn parts(self) -> usize {
        match self {
            Pattern::K5 | Pattern::K23 => 5,
            Pattern::K33 => 6,
            Pattern::K4 => 4,
        }
    }

    /// Side A size for the bipartite patterns.
    fn side(self) -> Option<usize> {
        match self {
            Pattern::K33 => Some(3),
            Pattern::K23 => Some(2),
            _ => None,
        }
    }

    /// Whether branch positions i and j must be joined.
    fn needs(self, i: usize, j: usize) -> bool {
        match self.side() {
            None => i != j,
            Some(a) => (i < a) != (j < a),
        }
    }
}

impl std::str::FromStr for Pattern {
    type Err = Error;
    fn from_str(s: &str) -> Result<Pattern> {
        match s.to_ascii_uppercase().replace(['_', ','], "").as_str() {
            "K5" => Ok(Pattern::K5),
            "K33" => Ok(Pattern::K33),
            "K4" => Ok(Pattern::K4),
            "K23" => Ok(Pattern::K23),
            _ => Err(Error::BadParams(format!("unknown pattern {s:?}"))),
        }
    }
}

/// Branch sets of a minor; for bipartite patterns the first side comes first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinorWitness {
    pub pattern: Pattern,
    pub branch_sets: Vec<Vec<usize>>,
}

impl MinorWitness {
    pub fn verify(&self, g: &Graph) -> bool {
        let k = self.pattern.parts();
        if self.branch_sets.len() != k {
            return false;
        }
        let mut owner = vec![NONE; g.n()];
        for (i, set) in self.branch_sets.iter().enumerate() {
            if set.is_empty() {
                return false;
            }
            for &v in set {
                if v >= g.n() || owner[v] != NONE {
                    return false;
                }
                owner[v] = i;
            }
            if g.induced(set).component_count() != 1 {
                return false;
            }
        }
        let mut adj = vec![vec![false; k]; k];
        for &(u, v) in g.edges() {
            if owner[u] != NONE && owner[v] != NONE {
                adj[owner[u]][owner[v]] = true;
                adj[owner[v]][owner[u]] = true;
            }
        }
        (0..k).all(|i| (0..k).all(|j| !self.pattern.needs(i, j) || adj[i][j]))
    }
}

/// Searches each component's partitions into connected parts.
pub fn minor_witness(g: &Graph, pattern: Pattern) -> Result<Option<MinorWitness>> {
    let k = pattern.parts();
    for comp in g.components() {
        if comp.len() < k {
            continue;
        }
        cap_check("component order for minor search", comp.len(), MINOR_MAX_N)?;
        let h = g.induced(&comp);
        if let Some(sets) = partition_search(&h, pattern) {
            let branch_sets = sets.into_iter().map(|s| s.into_iter().map(|v| comp[v]).collect()).collect();
            return Ok(Some(MinorWitness { pattern, branch_sets }));
        }
    }
    Ok(None)
}

fn partition_search(h: &Graph, pattern: Pattern) -> Option<Vec<Vec<usize>>> {
    let n = h.n();
    let k = pattern.parts();
    let mut label = vec![0usize; n];
    fn check(h: &Graph, label: &[usize], pattern: Pattern) -> Option<Vec<Vec<usize>>> {
        let k = pattern.parts();
        let mut sets = vec![Vec::new(); k];
        for (v, &l) in label.iter().enumerate() {
            sets[l].push(v);
        }
        let mut adj = vec![vec![false; k]; k];
        for &(u, v) in h.edges() {
            adj[label[u]][label[v]] = true;
            adj[label[v]][label[u]] = true;
        }
        let order: Vec<usize> = match pattern.side() {
            None => {
                if (0..k).any(|i| (0..k).any(|j| i != j && !adj[i][j])) {
                    return None;
                }
                (0..k).collect()
            }
            Some(a) => {
                let side = (0u32..1 << k).filter(|s| s.count_ones() as usize == a).find(|&s| {
                    (0..k).all(|i| (0..k).all(|j| (s >> i & 1 == 0) || (s >> j & 1 == 1) || adj[i][j]))
                })?;
                let mut o: Vec<usize> = (0..k).filter(|&i| side >> i & 1 == 1).collect();
                o.extend((0..k).filter(|&i| side >> i & 1 == 0));
                o
            }
        };
        if sets.iter().any(|s| h.induced(s).component_count() != 1) {
            return None;
        }
        Some(order.into_iter().map(|i| std::mem::take(&mut sets[i])).collect())
    }
    fn go(h: &Graph, i: usize, used: usize, label: &mut [usize], pattern: Pattern) -> Option<Vec<Vec<usize>>> {
        let (n, k) = (h.n(), pattern.parts());
        if n - i < k - used {
            return None;
        }
        if i == n {
            return check(h, label, pattern);
        }
        for l in 0..(used + 1).min(k) {
            label[i] = l;
            if let Some(r) = go(h, i + 1, used.max(l + 1), label, pattern) {
                return Some(r);
            }
        }
        None
    }
    if n < k {
        return None;
    }
    go(h, 0, 0, &mut label, pattern)
}

/// A subdivision of K5 or K3,3: branch vertices plus one path per pattern edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Subdivision {
    pub pattern: Pattern,
    pub branch: Vec<usize>,
    pub paths: Vec<Vec<usize>>,
}

impl Subdivision {
    pub fn verify(&self, g: &Graph) -> bool {
        let k = self.pattern.parts();
        if self.branch.len() != k || !matches!(self.pattern, Pattern::K5 | Pattern::K33) {
            return false;
        }
        let mut pairs: Vec<(usize, usize)> =
            (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).filter(|&(i, j)| self.pattern.needs(i, j)).collect();
        let mut used = vec![false; g.n()];
        for &b in &self.branch {
            if b >= g.n() || std::mem::replace(&mut used[b], true) {
                return false;
            }
        }
        for p in &self.paths {
            if p.len() < 2 || p.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
                return false;
            }
            for &v in &p[1..p.len() - 1] {
                if std::mem::replace(&mut used[v], true) {
                    return false;
                }
            }
            let (Some(i), Some(j)) = (
                self.branch.iter().position(|&b| b == p[0]),
                self.branch.iter().position(|&b| b == *p.last().unwrap()),
            ) else {
                return false;
            };
            let Some(pos) = pairs.iter().position(|&q| q == (i.min(j), i.max(j))) else {
                return false;
            };
            pairs.swap_remove(pos);
        }
        pairs.is_empty()
    }
}

/// Deletes edges while the rest stays non-planar, then reads off the
/// branch vertices and paths of the minimal remainder.
pub fn kuratowski_subdivision(g: &Graph) -> Option<Subdivision> {
    if is_planar(g) {
        return None;
    }
    let mut h = g.clone();
    for &(u, v) in g.edges() {
        let t = h.without_edge(u, v);
        if !is_planar(&t) {
            h = t;
        }
    }
    let branch: Vec<usize> = (0..h.n()).filter(|&v| h.degree(v) >= 3).collect();
    let pattern = if branch.len() == 5 { Pattern::K5 } else { Pattern::K33 };
    let mut paths = Vec::new();
    let is_branch = |v: usize| h.degree(v) >= 3;
    for &b in &branch {
        for &first in h.neighbors(b) {
            let mut path = vec![b, first];
            while !is_branch(*path.last().unwrap()) {
                let (prev, cur) = (path[path.len() - 2], path[path.len() - 1]);
                let next = *h.neighbors(cur).iter().find(|&&w| w != prev).unwrap();
                path.push(next);
            }
            if b < *path.last().unwrap() {
                paths.push(path);
            }
        }
    }
    let branch = match pattern {
        Pattern::K33 => {
            // put b0 and the branch vertices not joined to it first
            let joined: Vec<usize> = paths
                .iter()
                .filter_map(|p| {
                    let (x, y) = (p[0], *p.last().unwrap());
                    (x == branch[0]).then_some(y).or((y == branch[0]).then_some(x))
                })
                .collect();
            let mut side: Vec<usize> = branch.iter().copied().filter(|b| !joined.contains(b)).collect();
            side.extend(joined);
            side
        }
        _ => branch,
    };
    Some(Subdivision { pattern, branch, paths })
}

/// Cyclic neighbour order at each vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RotationSystem {
    pub rot: Vec<Vec<usize>>,
}

impl RotationSystem {
    /// Parses one line per vertex listing its neighbours in cyclic order.
    pub fn parse(text: &str) -> Result<RotationSystem> {
        let mut rot = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let row = line
                .split_whitespace()
                .map(|t| t.parse::<usize>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| Error::Parse { line: i + 1, msg: e.to_string() })?;
            rot.push(row);
        }
        Ok(RotationSystem { rot })
    }

    /// Neighbours in increasing order.
    pub fn sorted(g: &Graph) -> RotationSystem {
        RotationSystem {
            rot: (0..g.n()).map(|v| g.neighbors(v).to_vec()).collect(),
        }
    }

    /// Face boundaries as dart cycles.
    pub fn faces(&self, g: &Graph) -> Result<Vec<Vec<(usize, usize)>>> {
        if self.rot.len() != g.n() {
            return Err(Error::BadRotation(format!("{} rows for {} vertices", self.rot.len(), g.n())));
        }
        let mut pos = Vec::with_capacity(g.n());
        for v in 0..g.n() {
            let mut r = self.rot[v].clone();
            r.sort_unstable();
            if r != g.neighbors(v) {
                return Err(Error::BadRotation(format!("row {v} is not a permutation of its neighbours")));
            }
            pos.push(self.rot[v].iter().enumerate().map(|(i, &w)| (w, i)).collect::<std::collections::HashMap<_, _>>());
        }
        let mut done = std::collections::HashSet::new();
        let mut faces = Vec::new();
        for &(a, b) in g.edges() {
            for start in [(a, b), (b, a)] {
                if done.contains(&start) {
                    continue;
                }
                let mut face = Vec::new();
                let mut d = start;
                while done.insert(d) {
                    face.push(d);
                    let (u, v) = d;
                    let r = &self.rot[v];
                    d = (v, r[(pos[v][&u] + 1) % r.len()]);
                }
                faces.push(face);
            }
        }
        Ok(faces)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EulerCheck {
    pub faces: usize,
    pub genus: usize,
}

/// Faces by tracing and genus from n − m + r = 2 − 2γ.
pub fn euler_check(g: &Graph, rot: &RotationSystem) -> Result<EulerCheck> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    // an edgeless connected graph has one face
    let r = rot.faces(g)?.len().max(1);
    let twice = 2 + g.m() - g.n() - r;
    assert!(twice.is_multiple_of(2), "Euler characteristic of an orientable surface is even");
    Ok(EulerCheck { faces: r, genus: twice / 2 })
}

/// Whether some rotation system has genus 0, by trying them all.
pub fn has_planar_rotation(g: &Graph, cap: u64) -> Result<bool> {
    let mut total: u64 = 1;
    for v in 0..g.n() {
        for i in 2..g.degree(v) as u64 {
            total = total.saturating_mul(i);
        }
    }
    cap_check("rotation systems", total as usize, cap as usize)?;
    let comps = g.components();
    for comp in comps {
        let h = g.induced(&comp);
        let target = 2 + h.m() - h.n();
        let mut rot = RotationSystem::sorted(&h);
        fn go(h: &Graph, v: usize, rot: &mut RotationSystem, target: usize) -> bool {
            if v == h.n() {
                return rot.faces(h).unwrap().len().max(1) == target;
            }
            let d = rot.rot[v].len();
            if d <= 2 {
                return go(h, v + 1, rot, target);
            }
            // fix the first neighbour, permute the rest
            let base = rot.rot[v].clone();
            let mut rest: Vec<usize> = base[1..].to_vec();
            let mut found = false;
            permute(&mut rest, 0, &mut |p| {
                if found {
                    return;
                }
                rot.rot[v] = std::iter::once(base[0]).chain(p.iter().copied()).collect();
                found = go(h, v + 1, rot, target);
            });
            rot.rot[v] = base;
            found
        }
        if !go(&h, 0, &mut rot, target) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn permute(a: &mut Vec<usize>, i: usize, f: &mut dyn FnMut(&[usize])) {
    if i == a.len() {
        f(a);
        return;
    }
    for j in i..a.len() {
        a.swap(i, j);
        permute(a, i + 1, f);
        a.swap(i, j);
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TopologyReport {
    pub n: usize,
    pub m: usize,
    pub planar: bool,
    /// Planar with m = 3n − 6.
    pub maximal_planar: bool,
    /// Edge-count bound that rejected the graph before any search.
    pub prefilter: Option<String>,
    pub subdivision: Option<Subdivision>,
    /// None when a component is over [`MINOR_MAX_N`].
    pub minor: Option<MinorWitness>,
    pub outerplanar: Option<bool>,
    pub outer_witness: Option<MinorWitness>,
    /// max(0, m − 3n + 6).
    pub crossing_lower_bound: usize,
}

fn prefilter(g: &Graph) -> Option<String> {
    let (n, m) = (g.n(), g.m());
    if n >= 3 && m > 3 * n - 6 {
        return Some(format!("m = {m} > 3n - 6 = {}", 3 * n - 6));
    }
    if n >= 3 && m > 2 * n - 4 && crate::graphcore::bipartition(g).is_bipartite() {
        return Some(format!("bipartite with m = {m} > 2n - 4 = {}", 2 * n - 4));
    }
    None
}

pub fn planarity(g: &Graph) -> Result<TopologyReport> {
    let (n, m) = (g.n(), g.m());
    let planar = is_planar(g);
    let pre = prefilter(g);
    debug_assert!(pre.is_none() || !planar);
    let (subdivision, minor) = if planar {
        (None, None)
    } else {
        let small = g.components().iter().all(|c| c.len() <= MINOR_MAX_N);
        let minor = if small {
            match minor_witness(g, Pattern::K5)? {
                Some(w) => Some(w),
                None => minor_witness(g, Pattern::K33)?,
            }
        } else {
            None
        };
        (kuratowski_subdivision(g), minor)
    };
    Ok(TopologyReport {
        n,
        m,
        planar,
        maximal_planar: planar && n >= 3 && m == 3 * n - 6,
        prefilter: pre,
        subdivision,
        minor,
        outerplanar: None,
        outer_witness: None,
        crossing_lower_bound: crossing_lower_bound(g),
    })
}

/// Outerplanar iff G + K_1 is planar, cross-checked against K4/K2,3 minors.
pub fn outerplanarity(g: &Graph) -> Result<TopologyReport> {
    let mut report = planarity(g)?;
    let by_join = is_planar(&join(g, &Graph::empty(1)));
    let witness = match minor_witness(g, Pattern::K4)? {
        Some(w) => Some(w),
        None => minor_witness(g, Pattern::K23)?,
    };
    assert_eq!(by_join, witness.is_none(), "outerplanarity routes disagree");
    report.outerplanar = Some(by_join);
    report.outer_witness = witness;
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GenusFamily {
    Complete(usize),
    CompleteBipartite(usize, usize),
    Hypercube(usize),
}

pub fn genus_formula(family: GenusFamily) -> Result<u64> {
    let ceil_div = |a: u64, b: u64| a.div_ceil(b);
    match family {
        GenusFamily::Complete(n) if n >= 3 => {
            let n = n as u64;
            Ok(if n <= 4 { 0 } else { ceil_div((n - 3) * (n - 4), 12) })
        }
        GenusFamily::CompleteBipartite(a, b) if a >= 2 && b >= 2 => Ok(ceil_div((a as u64 - 2) * (b as u64 - 2), 4)),
        GenusFamily::Hypercube(d) if (2..=60).contains(&d) => Ok(if d <= 3 { 0 } else { 1 + ((d as u64 - 4) << (d - 3)) }),
        _ => Err(Error::BadParams(format!("no genus formula for {family:?}"))),
    }
}

pub fn crossing_lower_bound(g: &Graph) -> usize {
    (g.m() + 6).saturating_sub(3 * g.n())
}

/// Guy's upper bound for cr(K_n).
pub fn guy_bound(n: usize) -> u64 {
    let h = |x: usize| (x / 2) as u64;
    h(n) * h(n.saturating_sub(1)) * h(n.saturating_sub(2)) * h(n.saturating_sub(3)) / 4
}

/// ⌊m/2⌋⌊(m−1)/2⌋⌊n/2⌋⌊(n−1)/2⌋.
pub fn zarankiewicz_number(m: usize, n: usize) -> u64 {
    let f = |x: usize| (x / 2) as u64 * (x.saturating_sub(1) / 2) as u64;
    f(m) * f(n)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Drawing {
    /// Integer coordinates, the m-side first.
    pub coords: Vec<(i64, i64)>,
    pub segments: Vec<(usize, usize)>,
    pub crossings: u64,
}

fn orient(a: (i64, i64), b: (i64, i64), c: (i64, i64)) -> i64 {
    ((b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)).signum()
}

/// Counts properly crossing pairs among segments with no shared endpoint.
pub fn count_crossings(coords: &[(i64, i64)], segments: &[(usize, usize)]) -> u64 {
    let mut count = 0;
    for (i, &(a, b)) in segments.iter().enumerate() {
        for &(c, d) in &segments[i + 1..] {
            if a == c || a == d || b == c || b == d {
                continue;
            }
            let (pa, pb, pc, pd) = (coords[a], coords[b], coords[c], coords[d]);
            if orient(pa, pb, pc) * orient(pa, pb, pd) < 0 && orient(pc, pd, pa) * orient(pc, pd, pb) < 0 {
                count += 1;
            }
        }
    }
    count
}

/// Straight-line drawing of K_{m,n} with u_i at (i·(−1)^i, 0) and v_j at (0, j·(−1)^j).
pub fn zarankiewicz_drawing(m: usize, n: usize) -> Drawing {
    let sign = |i: usize| if i.is_multiple_of(2) { 1 } else { -1 };
    let mut coords: Vec<(i64, i64)> = (1..=m).map(|i| (i as i64 * sign(i), 0)).collect();
    coords.extend((1..=n).map(|j| (0, j as i64 * sign(j))));
    let segments: Vec<(usize, usize)> = (0..m).flat_map(|i| (0..n).map(move |j| (i, m + j))).collect();
    let crossings = count_crossings(&coords, &segments);
    Drawing { coords, segments, crossings }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, complete_bipartite, cycle, petersen};

    #[test]
    fn kuratowski_basics() {
        assert!(!is_planar(&complete(5)) && !is_planar(&complete_bipartite(3, 3)));
        assert!(is_planar(&complete(4)) && is_planar(&cycle(6)));
        let s = kuratowski_subdivision(&petersen()).unwrap();
        assert!(s.verify(&petersen()));
        let w = minor_witness(&petersen(), Pattern::K5).unwrap().unwrap();
        assert!(w.verify(&petersen()));
    }

    #[test]
    fn drawing_k45() {
        assert_eq!(zarankiewicz_drawing(4, 5).crossings, 8);
    }

    #[test]
    fn k4_faces() {
        let k4 = complete(4);
        let rot = RotationSystem {
            rot: vec![vec![1, 2, 3], vec![0, 3, 2], vec![0, 1, 3], vec![0, 2, 1]],
        };
        let e = euler_check(&k4, &rot).unwrap();
        assert_eq!((e.faces, e.genus), (4, 0));
        assert!(has_planar_rotation(&k4, 1000).unwrap());
        assert!(!has_planar_rotation(&complete_bipartite(3, 3), 100000).unwrap());
    }
}
