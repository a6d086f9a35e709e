//! Degree-sequence tests and constructive realizations.
//!
//! Vertex `i` of every witness is position `i` of the input sequence, so a
//! witness realizes the sequence exactly as it was given, sorted or not.

use crate::error::{Error, Result};
use crate::graphcore::{Graph, Mode};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SeqClass {
    Pseudo,
    Multi,
    Simple,
    Connected,
    Tree,
    Split,
    PerfectMatching,
}

impl std::str::FromStr for SeqClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<SeqClass> {
        Ok(match s {
            "pseudo" => SeqClass::Pseudo,
            "multi" => SeqClass::Multi,
            "simple" => SeqClass::Simple,
            "connected" => SeqClass::Connected,
            "tree" => SeqClass::Tree,
            "split" => SeqClass::Split,
            "pm" | "perfect_matching" => SeqClass::PerfectMatching,
            _ => return Err(Error::BadParams(format!("unknown class {s:?}"))),
        })
    }
}

/// A sequence stored non-increasing, with the input position of each entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeSequence {
    pub d: Vec<usize>,
    /// `labels[i]` is the input position of `d[i]`; ties keep input order.
    pub labels: Vec<usize>,
}

impl DegreeSequence {
    pub fn new(input: &[usize]) -> DegreeSequence {
        let mut labels: Vec<usize> = (0..input.len()).collect();
        labels.sort_by(|&a, &b| input[b].cmp(&input[a]));
        DegreeSequence {
            d: labels.iter().map(|&i| input[i]).collect(),
            labels,
        }
    }

    pub fn n(&self) -> usize {
        self.d.len()
    }

    pub fn sum(&self) -> usize {
        self.d.iter().sum()
    }

    /// k(d) = max{i : d_i ≥ i − 1} with 1-based i; 0 for the empty sequence.
    pub fn k(&self) -> usize {
        (1..=self.n()).filter(|&i| self.d[i - 1] + 1 >= i).max().unwrap_or(0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RealizationVerdict {
    pub class: SeqClass,
    pub realizable: bool,
    pub mode: Mode,
    /// Edge list of the realization; loops appear as `(v, v)`.
    pub witness: Option<Vec<(usize, usize)>>,
    pub violated_condition: Option<String>,
    /// Perfect matching inside the witness, for that class.
    pub perfect_matching: Option<Vec<(usize, usize)>>,
    /// Number of transfer or swap steps the construction took.
    pub steps: usize,
    /// The bounded swap walk gave up and exhaustive search produced the witness.
    pub fallback_used: bool,
}

impl RealizationVerdict {
    fn yes(class: SeqClass, mode: Mode, edges: Vec<(usize, usize)>) -> Self {
        RealizationVerdict {
            class,
            realizable: true,
            mode,
            witness: Some(edges),
            violated_condition: None,
            perfect_matching: None,
            steps: 0,
            fallback_used: false,
        }
    }

    fn no(class: SeqClass, mode: Mode, why: String) -> Self {
        RealizationVerdict {
            class,
            realizable: false,
            mode,
            witness: None,
            violated_condition: Some(why),
            perfect_matching: None,
            steps: 0,
            fallback_used: false,
        }
    }
}

/// Degrees of an edge list where a loop adds two.
pub fn degrees_of(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let mut d = vec![0; n];
    for &(u, v) in edges {
        d[u] += 1;
        d[v] += 1;
    }
    d
}

/// Pairs up odd entries in input order, then puts ⌊d_i/2⌋ loops at each vertex.
pub fn realize_pseudograph(d: &[usize]) -> RealizationVerdict {
    let sum: usize = d.iter().sum();
    if sum % 2 == 1 {
        return RealizationVerdict::no(SeqClass::Pseudo, Mode::Pseudo, format!("degree sum {sum} is odd"));
    }
    let odd: Vec<usize> = (0..d.len()).filter(|&i| d[i] % 2 == 1).collect();
    let mut edges: Vec<(usize, usize)> = odd.chunks(2).map(|p| (p[0], p[1])).collect();
    for (i, &x) in d.iter().enumerate() {
        edges.extend(std::iter::repeat_n((i, i), x / 2));
    }
    RealizationVerdict::yes(SeqClass::Pseudo, Mode::Pseudo, edges)
}

/// Loop-free multigraph realization.
///
/// The largest entry v_1 first takes d_i parallel edges to every other v_i; while
/// v_1 still has too many edges, edges v_1v_a and v_1v_b to its two least distinct
/// neighbours are traded for one edge v_av_b.
pub fn realize_multigraph(d: &[usize]) -> RealizationVerdict {
    let class = SeqClass::Multi;
    let sum: usize = d.iter().sum();
    if sum % 2 == 1 {
        return RealizationVerdict::no(class, Mode::Multi, format!("degree sum {sum} is odd"));
    }
    if d.is_empty() {
        return RealizationVerdict::yes(class, Mode::Multi, Vec::new());
    }
    let seq = DegreeSequence::new(d);
    let (v1, d1) = (seq.labels[0], seq.d[0]);
    let rest = sum - d1;
    if d1 > rest {
        return RealizationVerdict::no(class, Mode::Multi, format!("d_1 = {d1} exceeds the sum {rest} of the others"));
    }
    let n = d.len();
    // mult[i]: parallel edges v1–i
    let mut mult: Vec<usize> = (0..n).map(|i| if i == v1 { 0 } else { d[i] }).collect();
    let mut extra = Vec::new();
    let mut deg = rest;
    let mut steps = 0;
    while deg > d1 {
        let mut nb = (0..n).filter(|&i| mult[i] > 0);
        let (a, b) = (nb.next().unwrap(), nb.next().unwrap());
        mult[a] -= 1;
        mult[b] -= 1;
        extra.push((a, b));
        deg -= 2;
        steps += 1;
    }
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for i in 0..n {
        edges.extend(std::iter::repeat_n((v1.min(i), v1.max(i)), mult[i]));
    }
    edges.extend(extra);
    edges.sort_unstable();
    let mut v = RealizationVerdict::yes(class, Mode::Multi, edges);
    v.steps = steps;
    v
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ErdosGallai {
    pub graphical: bool,
    pub even_sum: bool,
    /// Least k whose inequality fails.
    pub failing_k: Option<usize>,
    /// Every failing k with both sides of its inequality.
    pub failures: Vec<(usize, usize, usize)>,
}

/// Σ_{i≤k} d_i ≤ k(k−1) + Σ_{i>k} min(k, d_i), checked for k = 1..n on the sorted sequence.
/// The k = n case only matters for n = 1, where it rules out a lone vertex of positive degree.
pub fn erdos_gallai(d: &[usize]) -> ErdosGallai {
    let s = DegreeSequence::new(d);
    let n = s.n();
    let even_sum = s.sum().is_multiple_of(2);
    let mut failures = Vec::new();
    let mut lhs = 0;
    for k in 1..=n {
        lhs += s.d[k - 1];
        let rhs = k * (k - 1) + s.d[k..].iter().map(|&x| x.min(k)).sum::<usize>();
        if lhs > rhs {
            failures.push((k, lhs, rhs));
        }
    }
    ErdosGallai {
        graphical: even_sum && failures.is_empty(),
        even_sum,
        failing_k: failures.first().map(|f| f.0),
        failures,
    }
}

/// One reduction of the Havel–Hakimi procedure: the table after subtracting and
/// the table after the stable re-sort, as (input position, residual degree).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HavelHakimiStep {
    pub reduced: Vec<(usize, i64)>,
    pub sorted: Vec<(usize, i64)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HavelHakimi {
    pub verdict: RealizationVerdict,
    pub steps: Vec<HavelHakimiStep>,
}

/// Havel–Hakimi with stable re-sorting; each reduction's star is an edge set of the witness.
pub fn havel_hakimi(d: &[usize]) -> HavelHakimi {
    let class = SeqClass::Simple;
    let mut table: Vec<(usize, i64)> = (0..d.len()).map(|i| (i, d[i] as i64)).collect();
    table.sort_by(|a, b| b.1.cmp(&a.1));
    let mut steps = Vec::new();
    let mut edges = Vec::new();
    while table.first().is_some_and(|x| x.1 > 0) {
        let (v, k) = table.remove(0);
        let k = k as usize;
        if k > table.len() {
            return HavelHakimi {
                verdict: RealizationVerdict::no(
                    class,
                    Mode::Simple,
                    format!("vertex {v} needs {k} neighbours but only {} remain", table.len()),
                ),
                steps,
            };
        }
        for x in table.iter_mut().take(k) {
            x.1 -= 1;
            edges.push((v.min(x.0), v.max(x.0)));
        }
        let reduced = table.clone();
        table.sort_by(|a, b| b.1.cmp(&a.1));
        steps.push(HavelHakimiStep {
            reduced,
            sorted: table.clone(),
        });
        if let Some(&(u, _)) = table.iter().find(|x| x.1 < 0) {
            return HavelHakimi {
                verdict: RealizationVerdict::no(class, Mode::Simple, format!("residual degree of vertex {u} became negative")),
                steps,
            };
        }
    }
    edges.sort_unstable();
    HavelHakimi {
        verdict: RealizationVerdict::yes(class, Mode::Simple, edges),
        steps,
    }
}

fn simple_witness(d: &[usize]) -> Option<Graph> {
    let hh = havel_hakimi(d);
    hh.verdict
        .witness
        .map(|e| Graph::from_edges(d.len(), e))
}

/// Connected (or tree) realization by the inductive construction: the last
/// vertex of the sorted sequence is removed, a smaller sequence is realized, and
/// the vertex is attached to v_1 (when d_n = 1) or to the l largest vertices (when d_n = l ≥ 2).
pub fn realize_connected(d: &[usize], want_tree: bool) -> Result<RealizationVerdict> {
    let class = if want_tree { SeqClass::Tree } else { SeqClass::Connected };
    let n = d.len();
    if n == 0 {
        return Err(Error::NotConnectedRealizable("empty sequence".into()));
    }
    let sum: usize = d.iter().sum();
    if want_tree {
        if n == 1 && d[0] != 0 || n >= 2 && (d.contains(&0) || sum != 2 * (n - 1)) {
            return Err(Error::NotConnectedRealizable(format!(
                "a tree needs positive degrees summing to {}",
                2 * (n - 1)
            )));
        }
    } else {
        if !erdos_gallai(d).graphical {
            return Err(Error::NotGraphical);
        }
        if n >= 2 && (d.contains(&0) || sum < 2 * (n - 1)) {
            return Err(Error::NotConnectedRealizable(format!(
                "needs positive degrees and sum at least {}",
                2 * (n - 1)
            )));
        }
    }
    let mut edges = Vec::new();
    let mut table: Vec<(usize, usize)> = (0..n).map(|i| (i, d[i])).collect();
    loop {
        table.sort_by(|a, b| b.1.cmp(&a.1));
        match table.len() {
            1 => break,
            2 => {
                edges.push((table[0].0.min(table[1].0), table[0].0.max(table[1].0)));
                break;
            }
            _ => {}
        }
        let (last, l) = table.pop().unwrap();
        for x in table.iter_mut().take(l) {
            x.1 -= 1;
            edges.push((last.min(x.0), last.max(x.0)));
        }
    }
    edges.sort_unstable();
    let g = Graph::new(n, &edges).map_err(|_| Error::NotGraphical)?;
    if g.degrees() != d || !g.is_connected() {
        return Err(Error::NotConnectedRealizable("construction did not close".into()));
    }
    Ok(RealizationVerdict::yes(class, Mode::Simple, edges))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitVerdict {
    pub split: bool,
    pub k: usize,
    /// Σ_{i≤k} d_i and k(k−1) + Σ_{i>k} d_i.
    pub lhs: usize,
    pub rhs: usize,
    /// Clique and independent set of the Havel–Hakimi witness when split.
    pub partition: Option<(Vec<usize>, Vec<usize>)>,
    pub witness: Vec<(usize, usize)>,
}

pub fn split_test(d: &[usize]) -> Result<SplitVerdict> {
    if !erdos_gallai(d).graphical {
        return Err(Error::NotGraphical);
    }
    let s = DegreeSequence::new(d);
    let k = s.k();
    let lhs: usize = s.d[..k].iter().sum();
    let rhs = k * k.saturating_sub(1) + s.d[k..].iter().sum::<usize>();
    let g = simple_witness(d).expect("graphical sequence has a witness");
    let split = lhs == rhs;
    let partition = split.then(|| {
        let mut c: Vec<usize> = s.labels[..k].to_vec();
        let mut i: Vec<usize> = s.labels[k..].to_vec();
        c.sort_unstable();
        i.sort_unstable();
        (c, i)
    });
    Ok(SplitVerdict {
        split,
        k,
        lhs,
        rhs,
        partition,
        witness: g.edges().to_vec(),
    })
}

/// Some clique / independent-set partition of `g`, by exhaustive search (n ≤ 20).
pub fn split_partition(g: &Graph) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
    crate::error::cap_check("order for split partition search", g.n(), 20)?;
    let n = g.n();
    let masks = g.masks();
    for c in 0u64..1 << n {
        let clique = (0..n).filter(|&v| c >> v & 1 == 1).all(|v| c & !(1 << v) & !masks[v] == 0);
        let indep = (0..n).filter(|&v| c >> v & 1 == 0).all(|v| !c & masks[v] & ((1u64 << n) - 1) == 0);
        if clique && indep {
            let cs = (0..n).filter(|&v| c >> v & 1 == 1).collect();
            let is = (0..n).filter(|&v| c >> v & 1 == 0).collect();
            return Ok(Some((cs, is)));
        }
    }
    Ok(None)
}

/// Kundu–Lovász swap walk budget is `SWAP_BUDGET_FACTOR · n²` moves.
pub const SWAP_BUDGET_FACTOR: usize = 10;
/// Largest n for the exhaustive fallback.
pub const PM_FALLBACK_MAX_N: usize = 8;

/// Realization containing a perfect matching.
///
/// Start from G realizing d and G' realizing d − 1 and shrink their symmetric
/// difference with the exchange moves of the existence proof until G' ⊆ G; then
/// E(G) ∖ E(G') is a perfect matching.
pub fn realize_with_perfect_matching(d: &[usize]) -> Result<RealizationVerdict> {
    let class = SeqClass::PerfectMatching;
    let n = d.len();
    if n % 2 == 1 {
        return Ok(RealizationVerdict::no(class, Mode::Simple, format!("n = {n} is odd")));
    }
    if !erdos_gallai(d).graphical {
        return Ok(RealizationVerdict::no(class, Mode::Simple, "d is not graphical".into()));
    }
    if d.contains(&0) {
        return Ok(RealizationVerdict::no(class, Mode::Simple, "d − 1 has a negative entry".into()));
    }
    let dm: Vec<usize> = d.iter().map(|&x| x - 1).collect();
    if !erdos_gallai(&dm).graphical {
        return Ok(RealizationVerdict::no(class, Mode::Simple, "d − 1 is not graphical".into()));
    }
    let mut g = adjacency(n, &simple_witness(d).unwrap());
    let mut gp = adjacency(n, &simple_witness(&dm).unwrap());
    let budget = SWAP_BUDGET_FACTOR * n * n;
    let mut steps = 0;
    let done = loop {
        if (0..n).all(|a| (0..n).all(|b| !gp[a][b] || g[a][b])) {
            break true;
        }
        if steps == budget || !swap_step(&mut g, &mut gp) {
            break false;
        }
        steps += 1;
    };
    let (edges, fallback_used) = if done {
        (edge_list(&g), false)
    } else if n <= PM_FALLBACK_MAX_N {
        match exhaustive_pm_realization(d) {
            Some(e) => (e, true),
            None => return Err(Error::BudgetExhausted("no realization found by exhaustive search".into())),
        }
    } else {
        return Err(Error::BudgetExhausted(format!("swap walk exceeded {budget} moves")));
    };
    let matching = if fallback_used {
        None
    } else {
        Some(
            edge_list(&g)
                .into_iter()
                .filter(|&(a, b)| !gp[a][b])
                .collect(),
        )
    };
    let mut v = RealizationVerdict::yes(class, Mode::Simple, edges);
    v.steps = steps;
    v.fallback_used = fallback_used;
    v.perfect_matching = matching.or_else(|| {
        let g = Graph::from_edges(n, v.witness.clone().unwrap());
        Some(crate::matching::max_matching(&g).edges)
    });
    Ok(v)
}

fn adjacency(n: usize, g: &Graph) -> Vec<Vec<bool>> {
    let mut a = vec![vec![false; n]; n];
    for &(u, v) in g.edges() {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

fn edge_list(a: &[Vec<bool>]) -> Vec<(usize, usize)> {
    let n = a.len();
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| a[u][v])
        .collect()
}

fn set_edge(a: &mut [Vec<bool>], u: usize, v: usize, on: bool) {
    a[u][v] = on;
    a[v][u] = on;
}

/// One exchange move. v has the most edges of G' ∖ G; zv ∈ G' ∖ G and zw ∈ G ∖ G'.
/// For y with vy ∈ G ∖ G': if wy ∉ G then G − vy − zw + vz + wy, else if wy ∈ G'
/// then G' − vz − wy + vy + zw. Both keep degrees and shrink the difference.
fn swap_step(g: &mut [Vec<bool>], gp: &mut [Vec<bool>]) -> bool {
    let n = g.len();
    let only_gp = |g: &[Vec<bool>], gp: &[Vec<bool>], a: usize, b: usize| gp[a][b] && !g[a][b];
    let only_g = |g: &[Vec<bool>], gp: &[Vec<bool>], a: usize, b: usize| g[a][b] && !gp[a][b];
    let mut by_count: Vec<(usize, usize)> = (0..n)
        .map(|v| ((0..n).filter(|&x| only_gp(g, gp, v, x)).count(), v))
        .collect();
    by_count.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    for &(r, v) in &by_count {
        if r == 0 {
            break;
        }
        for z in (0..n).filter(|&z| only_gp(g, gp, v, z)) {
            for w in (0..n).filter(|&w| w != v && only_g(g, gp, z, w)) {
                for y in (0..n).filter(|&y| y != w && y != z && only_g(g, gp, v, y)) {
                    if !g[w][y] {
                        set_edge(g, v, y, false);
                        set_edge(g, z, w, false);
                        set_edge(g, v, z, true);
                        set_edge(g, w, y, true);
                        return true;
                    }
                    if gp[w][y] {
                        set_edge(gp, v, z, false);
                        set_edge(gp, w, y, false);
                        set_edge(gp, v, y, true);
                        set_edge(gp, z, w, true);
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Tries every perfect matching M of K_n and looks for a realization of d − 1 avoiding M.
fn exhaustive_pm_realization(d: &[usize]) -> Option<Vec<(usize, usize)>> {
    let n = d.len();
    let mut matchings = Vec::new();
    fn pm(free: Vec<usize>, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if free.is_empty() {
            out.push(cur.clone());
            return;
        }
        let a = free[0];
        for i in 1..free.len() {
            let b = free[i];
            let rest: Vec<usize> = free.iter().copied().filter(|&x| x != a && x != b).collect();
            cur.push((a, b));
            pm(rest, cur, out);
            cur.pop();
        }
    }
    pm((0..n).collect(), &mut Vec::new(), &mut matchings);
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    for m in matchings {
        let mut need: Vec<usize> = d.iter().map(|&x| x - 1).collect();
        let mut chosen = Vec::new();
        if fill(&pairs, 0, &m, &mut need, &mut chosen) {
            chosen.extend(m);
            chosen.sort_unstable();
            return Some(chosen);
        }
    }
    None
}

fn fill(
    pairs: &[(usize, usize)],
    i: usize,
    banned: &[(usize, usize)],
    need: &mut Vec<usize>,
    chosen: &mut Vec<(usize, usize)>,
) -> bool {
    if need.iter().all(|&x| x == 0) {
        return true;
    }
    if i == pairs.len() {
        return false;
    }
    let (u, v) = pairs[i];
    let last_for_u = v == need.len() - 1;
    if need[u] > 0 && need[v] > 0 && !banned.contains(&(u, v)) {
        need[u] -= 1;
        need[v] -= 1;
        chosen.push((u, v));
        if !(last_for_u && need[u] > 0) && fill(pairs, i + 1, banned, need, chosen) {
            return true;
        }
        chosen.pop();
        need[u] += 1;
        need[v] += 1;
    }
    // (u, n-1) is the last pair that can still serve u
    if last_for_u && need[u] > 0 {
        return false;
    }
    fill(pairs, i + 1, banned, need, chosen)
}

/// Dispatches on the requested class.
pub fn realize(d: &[usize], class: SeqClass) -> Result<RealizationVerdict> {
    match class {
        SeqClass::Pseudo => Ok(realize_pseudograph(d)),
        SeqClass::Multi => Ok(realize_multigraph(d)),
        SeqClass::Simple => Ok(havel_hakimi(d).verdict),
        SeqClass::Connected => realize_connected(d, false),
        SeqClass::Tree => realize_connected(d, true),
        SeqClass::Split => {
            let s = split_test(d)?;
            Ok(if s.split {
                RealizationVerdict::yes(SeqClass::Split, Mode::Simple, s.witness)
            } else {
                RealizationVerdict::no(
                    SeqClass::Split,
                    Mode::Simple,
                    format!("at k = {}: {} != {}", s.k, s.lhs, s.rhs),
                )
            })
        }
        SeqClass::PerfectMatching => realize_with_perfect_matching(d),
    }
}
