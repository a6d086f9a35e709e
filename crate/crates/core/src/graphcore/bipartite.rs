use super::Graph;
use crate::error::{Error, Result};
use crate::linalg::{bareiss_det, submatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Bipartition {
    /// Every edge joins `v1` to `v2`.
    Parts { v1: Vec<usize>, v2: Vec<usize> },
    /// An odd simple cycle, closed (first vertex repeated at the end).
    OddCycle(Vec<usize>),
}

impl Bipartition {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartition::Parts { .. })
    }

    pub fn parts(&self) -> Option<(&[usize], &[usize])> {
        match self {
            Bipartition::Parts { v1, v2 } => Some((v1, v2)),
            Bipartition::OddCycle(_) => None,
        }
    }
}

/// Two-colours each component by BFS layers, the least vertex of a component going to `v1`.
/// A monochromatic edge closes an odd cycle through the two tree paths to their meeting point.
pub fn bipartition(g: &Graph) -> Bipartition {
    let n = g.n();
    let mut side = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for s in 0..n {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[u];
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                } else if side[w] == side[u] {
                    return Bipartition::OddCycle(tree_cycle(&parent, &depth, u, w));
                }
            }
        }
    }
    let v1 = (0..n).filter(|&v| side[v] == 0).collect();
    let v2 = (0..n).filter(|&v| side[v] == 1).collect();
    Bipartition::Parts { v1, v2 }
}

fn tree_cycle(parent: &[usize], depth: &[usize], u: usize, w: usize) -> Vec<usize> {
    let (mut a, mut b) = (u, w);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left.push(u);
    left
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnimodularityVerdict {
    pub totally_unimodular: bool,
    pub minors_checked: usize,
    /// All square submatrices up to the size cap were examined.
    pub exhaustive: bool,
    /// Rows, columns and determinant of a square submatrix with |det| > 1.
    pub violation: Option<(Vec<usize>, Vec<usize>, i64)>,
}

/// Minor budget for exhaustive enumeration.
const MINOR_BUDGET: usize = 2_000_000;
const SAMPLED_MINORS: usize = 20_000;

/// Determinant of the incidence-matrix minor on `rows` × `cols`.
pub fn incidence_det_minor(g: &Graph, rows: &[usize], cols: &[usize]) -> i64 {
    let b: Vec<Vec<i64>> = g
        .incidence_matrix()
        .into_iter()
        .map(|r| r.into_iter().map(i64::from).collect())
        .collect();
    bareiss_det(submatrix(&b, rows, cols))
}

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut r: usize = 1;
    for i in 0..k {
        r = r.saturating_mul(n - i) / (i + 1);
    }
    r
}

/// Checks whether every square submatrix of B(G) up to `size_cap` has determinant in {0, ±1}.
///
/// A non-bipartite graph is answered by its odd cycle, whose square incidence block
/// has determinant ±2. Otherwise minors are enumerated when `m <= 10`, and a fixed
/// seeded sample is drawn for larger graphs.
pub fn unimodularity_check(g: &Graph, size_cap: usize) -> Result<UnimodularityVerdict> {
    if let Bipartition::OddCycle(c) = bipartition(g) {
        let rows: Vec<usize> = c[..c.len() - 1].to_vec();
        let cols: Vec<usize> = c
            .windows(2)
            .map(|w| g.edge_id(w[0], w[1]).unwrap())
            .collect();
        let det = incidence_det_minor(g, &rows, &cols);
        return Ok(UnimodularityVerdict {
            totally_unimodular: false,
            minors_checked: 1,
            exhaustive: false,
            violation: Some((rows, cols, det)),
        });
    }
    let (n, m) = (g.n(), g.m());
    let kmax = size_cap.min(n).min(m);
    let b: Vec<Vec<i64>> = g
        .incidence_matrix()
        .into_iter()
        .map(|r| r.into_iter().map(i64::from).collect())
        .collect();
    let mut checked = 0;
    if m <= 10 {
        let total = (1..=kmax).fold(0usize, |acc, k| {
            acc.saturating_add(binom(n, k).saturating_mul(binom(m, k)))
        });
        if total > MINOR_BUDGET {
            return Err(Error::CapExceeded {
                what: "square minors",
                cap: MINOR_BUDGET,
            });
        }
        for k in 1..=kmax {
            for rows in subsets(n, k) {
                for cols in subsets(m, k) {
                    checked += 1;
                    let d = bareiss_det(submatrix(&b, &rows, &cols));
                    if d.abs() > 1 {
                        return Ok(UnimodularityVerdict {
                            totally_unimodular: false,
                            minors_checked: checked,
                            exhaustive: true,
                            violation: Some((rows, cols, d)),
                        });
                    }
                }
            }
        }
        return Ok(UnimodularityVerdict {
            totally_unimodular: true,
            minors_checked: checked,
            exhaustive: true,
            violation: None,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for _ in 0..SAMPLED_MINORS {
        let k = rng.gen_range(1..=kmax);
        let rows = rand::seq::index::sample(&mut rng, n, k).into_vec();
        let cols = rand::seq::index::sample(&mut rng, m, k).into_vec();
        checked += 1;
        let d = bareiss_det(submatrix(&b, &rows, &cols));
        if d.abs() > 1 {
            return Ok(UnimodularityVerdict {
                totally_unimodular: false,
                minors_checked: checked,
                exhaustive: false,
                violation: Some((rows, cols, d)),
            });
        }
    }
    Ok(UnimodularityVerdict {
        totally_unimodular: true,
        minors_checked: checked,
        exhaustive: false,
        violation: None,
    })
}

/// All k-subsets of `0..n` in lexicographic order.
pub(crate) fn subsets(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut cur: Option<Vec<usize>> = if k <= n { Some((0..k).collect()) } else { None };
    std::iter::from_fn(move || {
        let out = cur.clone()?;
        let c = cur.as_mut().unwrap();
        let mut i = k;
        loop {
            if i == 0 {
                cur = None;
                break;
            }
            i -= 1;
            if c[i] < n - k + i {
                c[i] += 1;
                for j in i + 1..k {
                    c[j] = c[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LargeBipartite {
    /// Side (0 or 1) of every vertex.
    pub side: Vec<u8>,
    pub edges: Vec<(usize, usize)>,
}

/// Spanning bipartite subgraph H with d_H(v) ≥ d_G(v)/2 at every vertex.
///
/// All vertices start on one side; the least vertex with fewer than half of its
/// edges crossing is moved across. Each move increases the number of crossing
/// edges, so the loop stops.
pub fn large_bipartite_subgraph(g: &Graph) -> LargeBipartite {
    let n = g.n();
    let mut side = vec![0u8; n];
    let crossing = |side: &[u8], v: usize| {
        g.neighbors(v)
            .iter()
            .filter(|&&w| side[w] != side[v])
            .count()
    };
    while let Some(v) = (0..n).find(|&v| 2 * crossing(&side, v) < g.degree(v)) {
        side[v] = 1 - side[v];
    }
    let edges = g
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| side[u] != side[v])
        .collect();
    LargeBipartite { side, edges }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_count() {
        assert_eq!(subsets(5, 2).count(), 10);
        assert_eq!(subsets(3, 0).count(), 1);
        assert_eq!(subsets(2, 3).count(), 0);
    }

    #[test]
    fn triangle_violation() {
        let g = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let v = unimodularity_check(&g, 3).unwrap();
        assert!(!v.totally_unimodular);
        assert_eq!(v.violation.unwrap().2.abs(), 2);
    }
}
