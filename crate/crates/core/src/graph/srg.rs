use std::fmt;

use super::Graph;
use crate::error::{invalid, Result};

/// Parameters `(v, k, lambda, mu)` of a strongly regular graph.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct SrgParams {
    pub v: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

impl SrgParams {
    /// `(v - k - 1) mu = k (k - lambda - 1)`.
    pub fn is_feasible(&self) -> bool {
        self.k > self.lambda && (self.v - self.k - 1) * self.mu == self.k * (self.k - self.lambda - 1)
    }

    /// Parameters of the complementary graph.
    pub fn complement(&self) -> SrgParams {
        let SrgParams { v, k, lambda, mu } = *self;
        SrgParams { v, k: v - k - 1, lambda: v + mu - 2 - 2 * k, mu: v + lambda - 2 * k }
    }
}

impl fmt::Display for SrgParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v={} k={} lambda={} mu={}", self.v, self.k, self.lambda, self.mu)
    }
}

/// Why a graph failed the strong-regularity scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NotSrg {
    Directed,
    Empty,
    Complete,
    Disconnected,
    Irregular { vertex: usize, degree: usize, expected: usize },
    AdjacentPair { u: usize, v: usize, common: usize, expected: usize },
    NonAdjacentPair { u: usize, v: usize, common: usize, expected: usize },
}

impl fmt::Display for NotSrg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotSrg::Directed => write!(f, "graph is directed"),
            NotSrg::Empty => write!(f, "graph has no edges"),
            NotSrg::Complete => write!(f, "graph is complete"),
            NotSrg::Disconnected => write!(f, "graph is disconnected"),
            NotSrg::Irregular { vertex, degree, expected } => {
                write!(f, "vertex {vertex} has degree {degree}, expected {expected}")
            }
            NotSrg::AdjacentPair { u, v, common, expected } => {
                write!(f, "adjacent pair ({u}, {v}) has {common} common neighbours, expected {expected}")
            }
            NotSrg::NonAdjacentPair { u, v, common, expected } => {
                write!(f, "non-adjacent pair ({u}, {v}) has {common} common neighbours, expected {expected}")
            }
        }
    }
}

/// Exhaustive pair scan for `(v, k, lambda, mu)`.
pub fn srg_params(g: &Graph) -> std::result::Result<SrgParams, NotSrg> {
    if g.is_directed() {
        return Err(NotSrg::Directed);
    }
    let n = g.vertex_count();
    if n == 0 || g.edge_count() == 0 {
        return Err(NotSrg::Empty);
    }
    if g.edge_count() == n * (n - 1) / 2 {
        return Err(NotSrg::Complete);
    }
    if !g.is_connected() {
        return Err(NotSrg::Disconnected);
    }
    let k = g.degree(0);
    if let Some(vertex) = (0..n).find(|&u| g.degree(u) != k) {
        return Err(NotSrg::Irregular { vertex, degree: g.degree(vertex), expected: k });
    }
    let mut lambda = None;
    let mut mu = None;
    for u in 0..n {
        for v in u + 1..n {
            let common = g.neighbours(u).intersection_count(g.neighbours(v));
            let (slot, adjacent) = if g.has_edge(u, v) { (&mut lambda, true) } else { (&mut mu, false) };
            match *slot {
                None => *slot = Some(common),
                Some(expected) if expected != common => {
                    return Err(if adjacent {
                        NotSrg::AdjacentPair { u, v, common, expected }
                    } else {
                        NotSrg::NonAdjacentPair { u, v, common, expected }
                    });
                }
                Some(_) => {}
            }
        }
    }
    Ok(SrgParams { v: n, k, lambda: lambda.unwrap_or(0), mu: mu.unwrap_or(0) })
}

/// Number of common out-neighbours of two distinct vertices.
pub fn common_neighbours(g: &Graph, u: usize, v: usize) -> Result<usize> {
    if u == v {
        return invalid("common_neighbours needs two distinct vertices");
    }
    if u >= g.vertex_count() || v >= g.vertex_count() {
        return invalid("vertex out of range");
    }
    Ok(g.neighbours(u).intersection_count(g.neighbours(v)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, false, &edges).unwrap()
    }

    #[test]
    fn six_cycle_is_not_strongly_regular() {
        // antipodal pairs share two neighbours, pairs at distance 2 share one
        assert!(matches!(srg_params(&cycle(6)), Err(NotSrg::NonAdjacentPair { .. })));
    }

    #[test]
    fn pentagon_and_petersen() {
        assert_eq!(srg_params(&cycle(5)).unwrap(), SrgParams { v: 5, k: 2, lambda: 0, mu: 1 });
        // Petersen graph as the Kneser graph K(5, 2)
        let pairs: Vec<(usize, usize)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
        let g = Graph::from_fn(10, false, |i, j| {
            let (a, b) = pairs[i];
            let (c, d) = pairs[j];
            a != c && a != d && b != c && b != d
        })
        .unwrap();
        let params = srg_params(&g).unwrap();
        assert_eq!(params, SrgParams { v: 10, k: 3, lambda: 0, mu: 1 });
        assert!(params.is_feasible());
        assert_eq!(params.complement(), SrgParams { v: 10, k: 6, lambda: 3, mu: 4 });
    }

    #[test]
    fn disqualified_structures() {
        assert_eq!(srg_params(&Graph::empty(4, false)), Err(NotSrg::Empty));
        assert_eq!(srg_params(&Graph::complete(4)), Err(NotSrg::Complete));
        assert_eq!(srg_params(&Graph::empty(4, true)), Err(NotSrg::Directed));
        let two_triangles = Graph::from_edges(6, false, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(srg_params(&two_triangles), Err(NotSrg::Disconnected));
        let path = Graph::from_edges(3, false, &[(0, 1), (1, 2)]).unwrap();
        assert!(matches!(srg_params(&path), Err(NotSrg::Irregular { .. })));
    }

    #[test]
    fn common_neighbours_rejects_equal_vertices() {
        assert!(common_neighbours(&cycle(5), 2, 2).is_err());
        assert_eq!(common_neighbours(&cycle(5), 0, 2).unwrap(), 1);
    }
}
