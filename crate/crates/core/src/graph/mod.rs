//! Loop-free graphs and digraphs on `{0, .., n-1}` with bitset rows.

mod bitset;
mod delta;
mod export;
pub(crate) mod search;
mod srg;

pub use bitset::Bitset;
pub use delta::{delta_uv, is_delta_graph, min_delta};
pub use search::{
    are_isomorphic, are_isomorphic_with, is_self_complementary, SearchConfig, DEFAULT_MAX_SEARCH_VERTICES,
};
pub use srg::{common_neighbours, srg_params, NotSrg, SrgParams};

use crate::error::{invalid, Result};
use crate::field::{FieldElement, FiniteField};
use crate::perm::Permutation;

/// A graph (`directed == false`, symmetric rows) or digraph. Row `u` holds the
/// out-neighbours of `u`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    n: usize,
    rows: Vec<Bitset>,
    directed: bool,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize, directed: bool) -> Self {
        Graph { n, rows: vec![Bitset::new(n); n], directed }
    }

    pub fn complete(n: usize) -> Self {
        Self::from_fn(n, false, |u, v| u != v).expect("complete graph is valid")
    }

    /// Adjacency given by a predicate; undirected graphs require it symmetric.
    pub fn from_fn(n: usize, directed: bool, adjacent: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let mut g = Self::empty(n, directed);
        for u in 0..n {
            for v in 0..n {
                if adjacent(u, v) {
                    if u == v {
                        return invalid(format!("loop at vertex {u}"));
                    }
                    g.rows[u].insert(v);
                }
            }
        }
        if !directed && !g.rows_symmetric() {
            return invalid("adjacency of an undirected graph must be symmetric");
        }
        Ok(g)
    }

    /// From an edge (or arc) list.
    pub fn from_edges(n: usize, directed: bool, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n, directed);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return invalid(format!("edge ({u}, {v}) out of range for {n} vertices"));
            }
            if u == v {
                return invalid(format!("loop at vertex {u}"));
            }
            g.rows[u].insert(v);
            if !directed {
                g.rows[v].insert(u);
            }
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn neighbours(&self, u: usize) -> &Bitset {
        &self.rows[u]
    }

    pub(crate) fn rows(&self) -> &[Bitset] {
        &self.rows
    }

    pub fn degree(&self, u: usize) -> usize {
        self.rows[u].count()
    }

    /// Edges `u < v` for graphs, all arcs for digraphs, in ascending order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.rows[u].iter() {
                if self.directed || u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    fn rows_symmetric(&self) -> bool {
        (0..self.n).all(|u| self.rows[u].iter().all(|v| self.rows[v].contains(u)))
    }

    /// Exactly one of `(u, v)`, `(v, u)` for every pair of distinct vertices.
    pub fn is_tournament(&self) -> bool {
        self.directed && (0..self.n).all(|u| (u + 1..self.n).all(|v| self.has_edge(u, v) != self.has_edge(v, u)))
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for (v, seen_v) in seen.iter_mut().enumerate() {
                if !*seen_v && (self.has_edge(u, v) || self.has_edge(v, u)) {
                    *seen_v = true;
                    stack.push(v);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Whether `p` maps arcs onto arcs.
    pub fn is_automorphism(&self, p: &Permutation) -> bool {
        p.degree() == self.n
            && (0..self.n).all(|u| {
                let pu = p.apply(u);
                self.rows[u].count() == self.rows[pu].count()
                    && self.rows[u].iter().all(|v| self.has_edge(pu, p.apply(v)))
            })
    }

    /// The graph with vertex `v` renamed `p(v)`.
    pub fn relabel(&self, p: &Permutation) -> Result<Graph> {
        if p.degree() != self.n {
            return invalid("permutation degree does not match the vertex count");
        }
        let mut g = Self::empty(self.n, self.directed);
        for (u, v) in self.edges() {
            g.rows[p.apply(u)].insert(p.apply(v));
            if !self.directed {
                g.rows[p.apply(v)].insert(p.apply(u));
            }
        }
        Ok(g)
    }
}

/// Cayley graph of the additive group of `field`: `u -> v` iff `v - u` lies
/// in `connection`. Undirected exactly when the connection set is closed
/// under negation.
pub fn cayley_graph(field: &FiniteField, connection: &[FieldElement]) -> Result<Graph> {
    let q = field.order() as usize;
    let mut member = vec![false; q];
    for &c in connection {
        if c.index() >= q {
            return invalid(format!("{c} is not an element of F_{q}"));
        }
        if c.is_zero() {
            return invalid("the connection set must not contain 0");
        }
        member[c.index()] = true;
    }
    let symmetric = field.elements().all(|x| member[x.index()] == member[field.neg(x).index()]);
    let mut g = Graph::empty(q, !symmetric);
    for u in field.elements() {
        for (c, _) in member.iter().enumerate().filter(|(_, &m)| m) {
            let v = field.add(u, FieldElement::from_index(c));
            g.rows[u.index()].insert(v.index());
        }
    }
    Ok(g)
}

/// Complement of an undirected graph.
pub fn complement(g: &Graph) -> Result<Graph> {
    if g.directed {
        return invalid("complement is defined here for undirected graphs only");
    }
    Graph::from_fn(g.n, false, |u, v| u != v && !g.has_edge(u, v))
}
