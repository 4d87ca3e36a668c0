//! Semilinear groups acting on the elements of a field, indexed by encoding.

use super::{Permutation, PermutationGroup};
use crate::arith::gcd;
use crate::error::{invalid, Result};
use crate::field::{FieldElement, FiniteField};

/// The permutation `x -> f(x)` of the field's encodings.
pub fn field_permutation(field: &FiniteField, f: impl Fn(FieldElement) -> FieldElement) -> Result<Permutation> {
    Permutation::from_fn(field.order() as usize, |i| f(FieldElement::from_index(i)).index())
}

/// `x -> x^(p^j)`.
pub fn frobenius_map(field: &FiniteField, j: u32) -> Permutation {
    let j = j % field.degree();
    field_permutation(field, |x| field.frobenius(x, j)).expect("Frobenius is a bijection")
}

fn translations(field: &FiniteField) -> Vec<Permutation> {
    let p = field.characteristic();
    (0..field.degree())
        .map(|i| {
            let b = field.element(p.pow(i)).expect("basis encodings are in range");
            field_permutation(field, |x| field.add(x, b)).unwrap()
        })
        .collect()
}

fn scaling(field: &FiniteField, a: FieldElement) -> Permutation {
    field_permutation(field, |x| field.mul(a, x)).unwrap()
}

/// `{x -> a x^g + b : a a nonzero square, g a field automorphism}`, of order
/// `q (q - 1) e / 2`. Generated by translations along the additive basis,
/// multiplication by `w^2` and `x -> x^p`.
pub fn a_delta_l1(field: &FiniteField) -> Result<PermutationGroup> {
    if field.characteristic() == 2 {
        return invalid(format!("q = {} is even", field.order()));
    }
    let mut gens = translations(field);
    gens.push(scaling(field, field.powu(field.primitive_root(), 2)));
    if field.degree() > 1 {
        gens.push(frobenius_map(field, 1));
    }
    PermutationGroup::from_generators(field.order() as usize, gens)
}

/// Exponents `0 <= j < e` with `d | p^j - 1`.
pub fn admissible_frobenius_exponents(field: &FiniteField, d: u64) -> Vec<u32> {
    let p = field.characteristic() as u64;
    let mut pj = 1u64;
    let mut out = Vec::new();
    for j in 0..field.degree() {
        if (pj + d - 1).is_multiple_of(d) {
            out.push(j);
        }
        pj = pj * p % d;
    }
    out
}

pub(crate) fn check_index(field: &FiniteField, d: u64) -> Result<()> {
    let q1 = field.order() as u64 - 1;
    if d < 2 || d >= q1 || !q1.is_multiple_of(d) {
        return invalid(format!("d = {d} is not a proper divisor of q - 1 = {q1} with d > 1"));
    }
    Ok(())
}

/// `G(d) = {x -> a x^(p^j) + b : a in D, d | p^j - 1}` where `D` is the
/// subgroup of index `d` in the multiplicative group.
#[derive(Clone, Debug)]
pub struct McConnelGroup {
    pub group: PermutationGroup,
    pub d: u64,
    /// `|D| = (q - 1) / d`.
    pub m: u64,
    pub admissible_exponents: Vec<u32>,
    /// `m q` times the number of admissible exponents.
    pub direct_count: u64,
    /// `m q gcd(m, e)`.
    pub formula_count: u64,
}

impl McConnelGroup {
    pub fn order_matches_direct_count(&self) -> bool {
        self.group.order_u64() == Some(self.direct_count)
    }

    pub fn order_matches_formula(&self) -> bool {
        self.group.order_u64() == Some(self.formula_count)
    }
}

pub fn mcconnel_group(field: &FiniteField, d: u64) -> Result<McConnelGroup> {
    check_index(field, d)?;
    let q = field.order() as u64;
    let m = (q - 1) / d;
    let exps = admissible_frobenius_exponents(field, d);
    let mut gens = translations(field);
    gens.push(scaling(field, field.powu(field.primitive_root(), d)));
    if let Some(&j) = exps.get(1) {
        gens.push(frobenius_map(field, j));
    }
    let group = PermutationGroup::from_generators(q as usize, gens)?;
    Ok(McConnelGroup {
        group,
        d,
        m,
        direct_count: m * q * exps.len() as u64,
        formula_count: m * q * gcd(m, field.degree() as u64),
        admissible_exponents: exps,
    })
}
