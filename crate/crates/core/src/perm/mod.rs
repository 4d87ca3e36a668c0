//! Permutations, permutation groups, and the groups of semilinear maps that
//! arise as automorphism groups of Paley-type structures.

mod affine;
mod automorphisms;
mod characterize;
mod group;
mod permutation;

pub use affine::{
    a_delta_l1, admissible_frobenius_exponents, field_permutation, frobenius_map, mcconnel_group, McConnelGroup,
};
pub use automorphisms::{
    check_paley_automorphism_group, design_automorphisms, graph_automorphisms, graph_automorphisms_with,
    is_arc_transitive, tournament_automorphisms, PaleyAutomorphismReport, MAX_DESIGN_POINTS,
    PALEY_AUTOMORPHISM_MAX_ORDER,
};
pub use characterize::{
    carlitz_permutations, frobenius_maps, lenstra_normalizer_members, mcconnel_permutations, CharacterizationReport,
    NormalizerReport, CARLITZ_MAX_ORDER, LENSTRA_MAX_ORDER, MCCONNEL_MAX_ORDER,
};
pub use group::{PermutationGroup, ENUMERATION_LIMIT};
pub use permutation::Permutation;
