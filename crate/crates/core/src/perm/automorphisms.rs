//! Automorphism groups of graphs, tournaments and designs.

use num_bigint::BigUint;

use super::{a_delta_l1, Permutation, PermutationGroup};
use crate::error::{invalid, Error, Result};
use crate::family::paley_graph;
use crate::field::FiniteField;
use crate::graph::search::automorphism_search;
use crate::graph::{Graph, SearchConfig};
use crate::hadamard::IncidenceDesign;

pub fn graph_automorphisms(g: &Graph) -> Result<PermutationGroup> {
    graph_automorphisms_with(g, &SearchConfig::default())
}

/// Full automorphism group. Every generator is checked against the arcs,
/// and the chain built from the search agrees with the search's order.
pub fn graph_automorphisms_with(g: &Graph, config: &SearchConfig) -> Result<PermutationGroup> {
    config.check(g.vertex_count())?;
    coloured_automorphisms(g, None)
}

fn coloured_automorphisms(g: &Graph, colours: Option<&[usize]>) -> Result<PermutationGroup> {
    let found = automorphism_search(g, colours);
    for p in &found.generators {
        assert!(g.is_automorphism(p), "search returned a non-automorphism {p}");
    }
    let group = PermutationGroup::from_base_and_strong_generators(g.vertex_count(), &found.base, found.generators)?;
    assert_eq!(group.order(), &found.order, "stabiliser chain disagrees with the search");
    Ok(group)
}

pub fn tournament_automorphisms(t: &Graph) -> Result<PermutationGroup> {
    if !t.is_tournament() {
        return invalid("the digraph is not a tournament");
    }
    graph_automorphisms(t)
}

/// Largest point count accepted by [`design_automorphisms`].
pub const MAX_DESIGN_POINTS: usize = 23;

/// Point permutations carrying blocks to blocks, found as the automorphisms
/// of the point-block incidence graph that fix the two sides.
pub fn design_automorphisms(d: &IncidenceDesign) -> Result<PermutationGroup> {
    let points = d.point_count();
    if points > MAX_DESIGN_POINTS {
        return Err(Error::ResourceLimit(format!("{points} points exceeds the design bound of {MAX_DESIGN_POINTS}")));
    }
    let blocks = d.blocks();
    let mut edges = Vec::new();
    for (b, block) in blocks.iter().enumerate() {
        edges.extend(block.iter().map(|&x| (x, points + b)));
    }
    let incidence = Graph::from_edges(points + blocks.len(), false, &edges)?;
    let colours: Vec<usize> = (0..points + blocks.len()).map(|v| (v >= points) as usize).collect();
    let full = coloured_automorphisms(&incidence, Some(&colours))?;
    let restricted: Vec<Permutation> =
        full.generators().iter().map(|g| Permutation::from_fn(points, |x| g.apply(x))).collect::<Result<_>>()?;
    let group = PermutationGroup::from_generators(points, restricted)?;
    // distinct blocks make the action on points faithful
    assert_eq!(group.order(), full.order());
    Ok(group)
}

/// Whether the group acts transitively on ordered pairs of adjacent
/// vertices. Generators must be automorphisms.
pub fn is_arc_transitive(g: &Graph, group: &PermutationGroup) -> Result<bool> {
    if group.degree() != g.vertex_count() {
        return invalid("group degree does not match the vertex count");
    }
    if let Some(bad) = group.generators().iter().find(|p| !g.is_automorphism(p)) {
        return invalid(format!("{bad} is not an automorphism"));
    }
    let arcs: Vec<(usize, usize)> =
        (0..g.vertex_count()).flat_map(|u| g.neighbours(u).iter().map(move |v| (u, v))).collect();
    match arcs.first() {
        None => Ok(false),
        Some(&first) => Ok(group.pair_orbit(first).len() == arcs.len()),
    }
}

/// Largest `q` accepted by [`check_paley_automorphism_group`].
pub const PALEY_AUTOMORPHISM_MAX_ORDER: u64 = 49;

/// Comparison of the computed automorphism group of `P(q)` with `A Delta L_1(q)`.
#[derive(Clone, Debug)]
pub struct PaleyAutomorphismReport {
    pub q: u64,
    pub automorphism_order: BigUint,
    pub affine_order: BigUint,
    /// Every generator of the computed group lies in the affine group.
    pub automorphisms_in_affine: bool,
    /// Every generator of the affine group lies in the computed group.
    pub affine_in_automorphisms: bool,
}

impl PaleyAutomorphismReport {
    pub fn groups_equal(&self) -> bool {
        self.automorphism_order == self.affine_order && self.automorphisms_in_affine && self.affine_in_automorphisms
    }
}

pub fn check_paley_automorphism_group(q: u64) -> Result<PaleyAutomorphismReport> {
    if q % 4 != 1 || q > PALEY_AUTOMORPHISM_MAX_ORDER {
        return invalid(format!("q must be 1 mod 4 and at most {PALEY_AUTOMORPHISM_MAX_ORDER}, got {q}"));
    }
    let field = FiniteField::with_order(q)?;
    let aut = graph_automorphisms(&paley_graph(&field)?)?;
    let affine = a_delta_l1(&field)?;
    Ok(PaleyAutomorphismReport {
        q,
        automorphism_order: aut.order().clone(),
        affine_order: affine.order().clone(),
        automorphisms_in_affine: aut.is_subgroup_of(&affine),
        affine_in_automorphisms: affine.is_subgroup_of(&aut),
    })
}
