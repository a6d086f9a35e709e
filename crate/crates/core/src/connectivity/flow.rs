//! Unit-capacity augmenting-path flow used for the disjoint-path searches.

use std::collections::VecDeque;

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    cap: u32,
    orig: u32,
}

#[derive(Debug, Clone)]
pub(crate) struct Flow {
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
}

impl Flow {
    pub(crate) fn new(n: usize) -> Flow {
        Flow {
            arcs: Vec::new(),
            out: vec![Vec::new(); n],
        }
    }

    pub(crate) fn node_count(&self) -> usize {
        self.out.len()
    }

    /// Adds arc a→b with capacity `cap` and its residual partner; returns the arc id.
    pub(crate) fn add(&mut self, a: usize, b: usize, cap: u32) -> usize {
        let id = self.arcs.len();
        self.arcs.push(Arc { to: b, cap, orig: cap });
        self.arcs.push(Arc { to: a, cap: 0, orig: 0 });
        self.out[a].push(id);
        self.out[b].push(id + 1);
        id
    }

    /// Breadth-first augmentation until no path is left or `limit` units are sent.
    pub(crate) fn max_flow(&mut self, s: usize, t: usize, limit: u32) -> u32 {
        let mut total = 0;
        while total < limit {
            let mut pred = vec![usize::MAX; self.out.len()];
            let mut seen = vec![false; self.out.len()];
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                if x == t {
                    break;
                }
                for &a in &self.out[x] {
                    let y = self.arcs[a].to;
                    if self.arcs[a].cap > 0 && !seen[y] {
                        seen[y] = true;
                        pred[y] = a;
                        queue.push_back(y);
                    }
                }
            }
            if !seen[t] {
                break;
            }
            let mut y = t;
            while y != s {
                let a = pred[y];
                self.arcs[a].cap -= 1;
                self.arcs[a ^ 1].cap += 1;
                y = self.arcs[a ^ 1].to;
            }
            total += 1;
        }
        total
    }

    /// Nodes reachable from `s` in the residual network.
    pub(crate) fn reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.out.len()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for &a in &self.out[x] {
                let y = self.arcs[a].to;
                if self.arcs[a].cap > 0 && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen
    }

    /// Removes opposite unit flows on the arc pair `a`, `b`.
    pub(crate) fn cancel(&mut self, a: usize, b: usize) {
        if self.flow_on(a) > 0 && self.flow_on(b) > 0 {
            self.arcs[a].cap += 1;
            self.arcs[a ^ 1].cap -= 1;
            self.arcs[b].cap += 1;
            self.arcs[b ^ 1].cap -= 1;
        }
    }

    pub(crate) fn flow_on(&self, a: usize) -> u32 {
        self.arcs[a].orig.saturating_sub(self.arcs[a].cap)
    }

    /// Splits the flow into `s`–`t` node walks, consuming it.
    pub(crate) fn decompose(&mut self, s: usize, t: usize) -> Vec<Vec<usize>> {
        let mut used: Vec<u32> = (0..self.arcs.len()).map(|a| self.flow_on(a)).collect();
        let mut paths = Vec::new();
        loop {
            let mut walk = vec![s];
            let mut x = s;
            while x != t {
                let Some(&a) = self.out[x].iter().find(|&&a| a % 2 == 0 && used[a] > 0) else {
                    break;
                };
                used[a] -= 1;
                x = self.arcs[a].to;
                walk.push(x);
            }
            if x != t {
                break;
            }
            paths.push(walk);
        }
        paths
    }
}
