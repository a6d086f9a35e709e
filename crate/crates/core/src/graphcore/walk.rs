use super::Graph;
use crate::error::{Error, Result};
use serde::Serialize;
use std::collections::HashSet;

/// Most specific class a vertex sequence belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WalkKind {
    Walk,
    ClosedWalk,
    Trail,
    Path,
    Cycle,
    SimpleCycle,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WalkClass {
    pub kind: WalkKind,
    pub length: usize,
    pub closed: bool,
    /// No edge repeats.
    pub trail: bool,
    /// No vertex repeats.
    pub simple_path: bool,
    /// Closed trail.
    pub cycle: bool,
    /// Closed trail where only the first and last vertex coincide.
    pub simple_cycle: bool,
}

fn check_walk(g: &Graph, seq: &[usize]) -> Result<()> {
    if seq.is_empty() {
        return Err(Error::EmptySet);
    }
    for &v in seq {
        if v >= g.n() {
            return Err(Error::OutOfRange { vertex: v, n: g.n() });
        }
    }
    for (i, w) in seq.windows(2).enumerate() {
        if !g.has_edge(w[0], w[1]) {
            return Err(Error::NotAWalk(i));
        }
    }
    Ok(())
}

/// Classifies `seq` as a walk. A single vertex is a trivial simple path.
pub fn classify_walk(g: &Graph, seq: &[usize]) -> Result<WalkClass> {
    check_walk(g, seq)?;
    let length = seq.len() - 1;
    let closed = length > 0 && seq[0] == seq[length];
    let mut used = HashSet::new();
    let trail = seq
        .windows(2)
        .all(|w| used.insert((w[0].min(w[1]), w[0].max(w[1]))));
    let distinct = |s: &[usize]| {
        let mut seen = HashSet::new();
        s.iter().all(|v| seen.insert(*v))
    };
    let simple_path = distinct(seq);
    let cycle = closed && trail;
    let simple_cycle = cycle && distinct(&seq[..length]);
    let kind = match (closed, trail) {
        (true, true) if simple_cycle => WalkKind::SimpleCycle,
        (true, true) => WalkKind::Cycle,
        (true, false) => WalkKind::ClosedWalk,
        (false, true) if simple_path => WalkKind::Path,
        (false, true) => WalkKind::Trail,
        (false, false) => WalkKind::Walk,
    };
    Ok(WalkClass {
        kind,
        length,
        closed,
        trail,
        simple_path,
        cycle,
        simple_cycle,
    })
}

/// Loop erasure: a simple path between the ends of a walk, as a subsequence of it.
pub fn reduce_to_simple_path(g: &Graph, seq: &[usize]) -> Result<Vec<usize>> {
    check_walk(g, seq)?;
    let mut out: Vec<usize> = Vec::new();
    for &v in seq {
        if let Some(p) = out.iter().position(|&x| x == v) {
            out.truncate(p + 1);
        } else {
            out.push(v);
        }
    }
    Ok(out)
}

/// An odd simple cycle contained in an odd closed walk, returned closed (first = last).
/// `Ok(None)` when the walk is not closed or has even length.
pub fn extract_odd_cycle(g: &Graph, seq: &[usize]) -> Result<Option<Vec<usize>>> {
    check_walk(g, seq)?;
    let k = seq.len() - 1;
    if k == 0 || seq[0] != seq[k] || k.is_multiple_of(2) {
        return Ok(None);
    }
    let mut w = seq.to_vec();
    loop {
        let len = w.len() - 1;
        // first inner repetition of a vertex
        let mut hit = None;
        'outer: for j in 1..len {
            for i in 0..j {
                if w[i] == w[j] {
                    hit = Some((i, j));
                    break 'outer;
                }
            }
        }
        let Some((i, j)) = hit else {
            return Ok(Some(w));
        };
        let inner: Vec<usize> = w[i..=j].to_vec();
        let mut outer: Vec<usize> = w[..=i].to_vec();
        outer.extend_from_slice(&w[j + 1..]);
        w = if (inner.len() - 1) % 2 == 1 { inner } else { outer };
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odd_cycle_from_walk() {
        // two triangles sharing vertex 0; the closed walk goes round both and back once more
        let g = Graph::new(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)]).unwrap();
        let w = [0, 1, 2, 0, 3, 4, 0, 1, 2, 0];
        let c = extract_odd_cycle(&g, &w).unwrap().unwrap();
        let cls = classify_walk(&g, &c).unwrap();
        assert!(cls.simple_cycle && cls.length % 2 == 1);
        assert_eq!(extract_odd_cycle(&g, &[0, 1, 0]).unwrap(), None);
    }

    #[test]
    fn loop_erasure() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (1, 3)]).unwrap();
        let p = reduce_to_simple_path(&g, &[0, 1, 2, 3, 1, 2]).unwrap();
        assert_eq!(p, vec![0, 1, 2]);
    }
}
