//! Equitable-partition refinement with individualisation and backtracking.
//!
//! The same engine answers "is there a bijection from `(G, pi)` to
//! `(H, sigma)`" for isomorphism testing, and, applied to `G` against itself,
//! builds automorphism groups level by level along a chain of point
//! stabilisers. Refinement is label-invariant: cells are split by the vector
//! of neighbour counts into every current cell and the pieces are ordered by
//! that vector, so an isomorphism carries refined partitions cell-for-cell.

use num_bigint::BigUint;

use super::{complement, Bitset, Graph};
use crate::error::{invalid, Error, Result};
use crate::perm::Permutation;

/// Vertex bound for isomorphism and automorphism searches.
pub const DEFAULT_MAX_SEARCH_VERTICES: usize = 64;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub max_vertices: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { max_vertices: DEFAULT_MAX_SEARCH_VERTICES }
    }
}

impl SearchConfig {
    pub(crate) fn check(&self, n: usize) -> Result<()> {
        if n > self.max_vertices {
            Err(Error::ResourceLimit(format!("{n} vertices exceeds the search bound of {}", self.max_vertices)))
        } else {
            Ok(())
        }
    }
}

/// Ordered partition of the vertex set; vertices ascend within each cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Partition {
    cells: Vec<Vec<usize>>,
}

impl Partition {
    pub(crate) fn unit(n: usize) -> Self {
        Partition { cells: if n == 0 { vec![] } else { vec![(0..n).collect()] } }
    }

    /// Cells ordered by colour value.
    pub(crate) fn from_colours(colours: &[usize]) -> Self {
        let mut distinct: Vec<usize> = colours.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        let cells = distinct.iter().map(|&c| (0..colours.len()).filter(|&v| colours[v] == c).collect()).collect();
        Partition { cells }
    }

    fn is_discrete(&self) -> bool {
        self.cells.iter().all(|c| c.len() == 1)
    }

    /// First smallest non-singleton cell.
    fn target_cell(&self) -> Option<usize> {
        self.cells.iter().enumerate().filter(|(_, c)| c.len() > 1).min_by_key(|(i, c)| (c.len(), *i)).map(|(i, _)| i)
    }

    /// Splits `v` off its cell, placing `{v}` first.
    fn individualize(&self, v: usize) -> Partition {
        let mut cells = Vec::with_capacity(self.cells.len() + 1);
        for cell in &self.cells {
            if cell.contains(&v) && cell.len() > 1 {
                cells.push(vec![v]);
                cells.push(cell.iter().copied().filter(|&x| x != v).collect());
            } else {
                cells.push(cell.clone());
            }
        }
        Partition { cells }
    }
}

pub(crate) struct Refiner<'a> {
    graph: &'a Graph,
    in_rows: Option<Vec<Bitset>>,
}

impl<'a> Refiner<'a> {
    pub(crate) fn new(graph: &'a Graph) -> Self {
        let in_rows = graph.is_directed().then(|| {
            let n = graph.vertex_count();
            let mut rows = vec![Bitset::new(n); n];
            for (u, v) in graph.edges() {
                rows[v].insert(u);
            }
            rows
        });
        Refiner { graph, in_rows }
    }

    fn signature(&self, v: usize, masks: &[Bitset]) -> Vec<u32> {
        let out = &self.graph.rows()[v];
        let mut sig: Vec<u32> = masks.iter().map(|m| out.intersection_count(m) as u32).collect();
        if let Some(in_rows) = &self.in_rows {
            sig.extend(masks.iter().map(|m| in_rows[v].intersection_count(m) as u32));
        }
        sig
    }

    /// Refines to the coarsest equitable partition finer than `p`.
    pub(crate) fn refine(&self, mut p: Partition) -> Partition {
        let n = self.graph.vertex_count();
        loop {
            let masks: Vec<Bitset> = p.cells.iter().map(|c| Bitset::from_iter_with_len(n, c.iter().copied())).collect();
            let mut cells = Vec::with_capacity(p.cells.len());
            let mut changed = false;
            for cell in &p.cells {
                if cell.len() == 1 {
                    cells.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(Vec<u32>, usize)> = cell.iter().map(|&v| (self.signature(v, &masks), v)).collect();
                keyed.sort();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        cells.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                        start = i;
                    }
                }
                if keyed.first().map(|k| &k.0) != keyed.last().map(|k| &k.0) {
                    changed = true;
                }
            }
            p = Partition { cells };
            if !changed {
                return p;
            }
        }
    }

    /// Cell sizes plus the quotient matrix of an equitable partition.
    fn invariant(&self, p: &Partition) -> Vec<u32> {
        let n = self.graph.vertex_count();
        let masks: Vec<Bitset> = p.cells.iter().map(|c| Bitset::from_iter_with_len(n, c.iter().copied())).collect();
        let mut inv = Vec::with_capacity(p.cells.len() * (p.cells.len() + 1));
        for cell in &p.cells {
            inv.push(cell.len() as u32);
            inv.extend(self.signature(cell[0], &masks));
        }
        inv
    }
}

/// Depth-first search for a bijection carrying `(left graph, pl)` onto
/// `(right graph, pr)`; both partitions must already be refined.
fn find_mapping(left: &Refiner<'_>, right: &Refiner<'_>, pl: &Partition, pr: &Partition) -> Option<Permutation> {
    if pl.cells.len() != pr.cells.len() {
        return None;
    }
    if pl.is_discrete() {
        let n = left.graph.vertex_count();
        let mut images = vec![0u32; n];
        for (a, b) in pl.cells.iter().zip(&pr.cells) {
            images[a[0]] = b[0] as u32;
        }
        let p = Permutation::from_images_unchecked(images);
        return maps_onto(left.graph, right.graph, &p).then_some(p);
    }
    let t = pl.target_cell().expect("non-discrete partition has a target cell");
    let v = pl.cells[t][0];
    let child_left = left.refine(pl.individualize(v));
    let inv_left = left.invariant(&child_left);
    for &w in &pr.cells[t] {
        let child_right = right.refine(pr.individualize(w));
        if right.invariant(&child_right) != inv_left {
            continue;
        }
        if let Some(p) = find_mapping(left, right, &child_left, &child_right) {
            return Some(p);
        }
    }
    None
}

fn maps_onto(g: &Graph, h: &Graph, p: &Permutation) -> bool {
    let n = g.vertex_count();
    (0..n).all(|u| {
        let pu = p.apply(u);
        g.degree(u) == h.degree(pu) && g.neighbours(u).iter().all(|v| h.has_edge(pu, p.apply(v)))
    })
}

/// Result of an automorphism search: a base, a strong generating set
/// relative to it, and the group order as the product of basic orbit lengths.
pub(crate) struct AutomorphismSearch {
    pub(crate) base: Vec<usize>,
    pub(crate) generators: Vec<Permutation>,
    pub(crate) order: BigUint,
}

/// Colour-preserving automorphisms. The base is the first path of
/// individualisations down to a discrete partition; levels are then filled
/// from the deepest upward, so each level only searches for base images not
/// already reached by the generators found below it.
pub(crate) fn automorphism_search(g: &Graph, colours: Option<&[usize]>) -> AutomorphismSearch {
    let n = g.vertex_count();
    let refiner = Refiner::new(g);
    let start = match colours {
        Some(c) => Partition::from_colours(c),
        None => Partition::unit(n),
    };
    let mut path = vec![refiner.refine(start)];
    let mut base = Vec::new();
    while let Some(t) = path.last().unwrap().target_cell() {
        let current = path.last().unwrap();
        let b = current.cells[t][0];
        base.push(b);
        let next = refiner.refine(current.individualize(b));
        path.push(next);
    }

    let mut generators: Vec<Permutation> = Vec::new();
    let mut order = BigUint::from(1u32);
    for level in (0..base.len()).rev() {
        let current = &path[level];
        let fixed = &path[level + 1];
        let fixed_inv = refiner.invariant(fixed);
        let t = current.target_cell().expect("base level has a target cell");
        let mut in_orbit = orbit_mask(base[level], &generators, n);
        for &c in &current.cells[t] {
            if in_orbit[c] {
                continue;
            }
            let moved = refiner.refine(current.individualize(c));
            if refiner.invariant(&moved) != fixed_inv {
                continue;
            }
            if let Some(p) = find_mapping(&refiner, &refiner, fixed, &moved) {
                generators.push(p);
                in_orbit = orbit_mask(base[level], &generators, n);
            }
        }
        order *= in_orbit.iter().filter(|&&b| b).count();
    }
    AutomorphismSearch { base, generators, order }
}

fn orbit_mask(point: usize, gens: &[Permutation], n: usize) -> Vec<bool> {
    let mut seen = vec![false; n];
    seen[point] = true;
    let mut stack = vec![point];
    while let Some(x) = stack.pop() {
        for g in gens {
            let y = g.apply(x);
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen
}

/// A vertex bijection `G -> H` preserving edges, if one exists.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<Option<Permutation>> {
    are_isomorphic_with(g, h, &SearchConfig::default())
}

pub fn are_isomorphic_with(g: &Graph, h: &Graph, config: &SearchConfig) -> Result<Option<Permutation>> {
    if g.is_directed() || h.is_directed() {
        return invalid("isomorphism testing is implemented for undirected graphs");
    }
    config.check(g.vertex_count())?;
    config.check(h.vertex_count())?;
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return Ok(None);
    }
    let left = Refiner::new(g);
    let right = Refiner::new(h);
    let n = g.vertex_count();
    let pl = left.refine(Partition::unit(n));
    let pr = right.refine(Partition::unit(n));
    if left.invariant(&pl) != right.invariant(&pr) {
        return Ok(None);
    }
    let found = find_mapping(&left, &right, &pl, &pr);
    if let Some(p) = &found {
        assert!(maps_onto(g, h, p), "isomorphism failed verification");
    }
    Ok(found)
}

/// An isomorphism from `g` onto its complement, if any.
pub fn is_self_complementary(g: &Graph) -> Result<Option<Permutation>> {
    let c = complement(g)?;
    are_isomorphic(g, &c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, false, &edges).unwrap()
    }

    #[test]
    fn refinement_of_a_path() {
        let path = Graph::from_edges(4, false, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let r = Refiner::new(&path);
        let p = r.refine(Partition::unit(4));
        assert_eq!(p.cells, vec![vec![0, 3], vec![1, 2]]);
    }

    #[test]
    fn cycle_automorphisms() {
        assert_eq!(automorphism_search(&cycle(5), None).order, BigUint::from(10u32));
        let c8 = automorphism_search(&cycle(8), None);
        assert_eq!(c8.order, BigUint::from(16u32));
        assert!(c8.generators.iter().all(|p| cycle(8).is_automorphism(p)));
    }

    #[test]
    fn empty_and_complete_graphs() {
        let empty = automorphism_search(&Graph::empty(6, false), None);
        assert_eq!(empty.order, BigUint::from(720u32));
        assert_eq!(empty.generators.len(), 5);
        assert_eq!(automorphism_search(&Graph::complete(5), None).order, BigUint::from(120u32));
        assert_eq!(automorphism_search(&Graph::empty(1, false), None).order, BigUint::from(1u32));
    }

    #[test]
    fn small_isomorphisms() {
        let path = Graph::from_edges(4, false, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(is_self_complementary(&path).unwrap().is_some());
        assert!(is_self_complementary(&Graph::complete(4)).unwrap().is_none());
        let c6 = cycle(6);
        let two_triangles = Graph::from_edges(6, false, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(are_isomorphic(&c6, &two_triangles).unwrap().is_none());
    }

    #[test]
    fn size_bound_is_enforced() {
        let g = Graph::empty(70, false);
        assert!(matches!(are_isomorphic(&g, &g), Err(Error::ResourceLimit(_))));
        let relaxed = SearchConfig { max_vertices: 80 };
        assert!(are_isomorphic_with(&g, &g, &relaxed).unwrap().is_some());
    }
}
