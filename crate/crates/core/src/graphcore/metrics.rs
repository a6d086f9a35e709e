use super::Graph;
use serde::Serialize;

/// Distances, eccentricities and component data. `None` stands for ∞.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Metrics {
    pub dist: Vec<Vec<Option<usize>>>,
    pub eccentricity: Vec<Option<usize>>,
    pub radius: Option<usize>,
    pub diameter: Option<usize>,
    /// Empty when the graph is disconnected.
    pub center: Vec<usize>,
    pub components: Vec<Vec<usize>>,
    pub component_count: usize,
    pub cyclomatic: usize,
}

pub fn metrics(g: &Graph) -> Metrics {
    let n = g.n();
    let dist: Vec<Vec<Option<usize>>> = (0..n).map(|s| g.bfs(s)).collect();
    let eccentricity: Vec<Option<usize>> = dist
        .iter()
        .map(|row| {
            row.iter()
                .try_fold(0usize, |acc, d| d.map(|d| acc.max(d)))
        })
        .collect();
    let components = g.components();
    let c = components.len();
    let connected = c <= 1 && n > 0;
    let (radius, diameter, center) = if connected {
        let ecc: Vec<usize> = eccentricity.iter().map(|e| e.unwrap()).collect();
        let r = *ecc.iter().min().unwrap();
        let d = *ecc.iter().max().unwrap();
        let center = (0..n).filter(|&v| ecc[v] == r).collect();
        (Some(r), Some(d), center)
    } else {
        (None, None, Vec::new())
    };
    Metrics {
        dist,
        eccentricity,
        radius,
        diameter,
        center,
        component_count: c,
        components,
        cyclomatic: g.m() + c - n,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_and_disconnected() {
        let p = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let m = metrics(&p);
        assert_eq!((m.radius, m.diameter), (Some(2), Some(4)));
        assert_eq!(m.center, vec![2]);
        assert_eq!(m.cyclomatic, 0);
        let e = metrics(&Graph::empty(2));
        assert_eq!(e.diameter, None);
        assert!(e.center.is_empty());
        assert_eq!(e.component_count, 2);
    }
}
