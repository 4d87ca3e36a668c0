//! Exhaustive searches for field permutations preserving a multiplicative
//! character class of differences.
//!
//! The class of a nonzero `x` is `log_w(x) mod d`: its coset of the
//! subgroup of index `d`. For `d = 2` this is the quadratic character. A
//! search fixes elements in encoding order and, after each assignment,
//! intersects the domains of the remaining elements with the values
//! compatible with it, kept as bitmasks.

use std::collections::HashSet;

use super::affine::check_index;
use super::{admissible_frobenius_exponents, frobenius_map, mcconnel_group, Permutation, PermutationGroup};
use crate::error::{invalid, Error, Result};
use crate::field::{FieldElement, FiniteField};

pub const CARLITZ_MAX_ORDER: u64 = 49;
pub const MCCONNEL_MAX_ORDER: u64 = 27;
pub const LENSTRA_MAX_ORDER: u64 = 13;

struct ClassSearch {
    q: usize,
    /// `diff[u][v]` = class of `u - v`, for `u != v`.
    diff: Vec<Vec<usize>>,
    /// `ahead[c][y]` = values `w` with class of `w - y` equal to `c`.
    ahead: Vec<Vec<u64>>,
    /// `behind[c][y]` = values `w` with class of `y - w` equal to `c`.
    behind: Vec<Vec<u64>>,
}

impl ClassSearch {
    fn new(field: &FiniteField, d: u64) -> Result<Self> {
        let q = field.order() as usize;
        let d = d as usize;
        let el: Vec<FieldElement> = field.elements().collect();
        let class = |x: FieldElement| -> usize { field.log(x).expect("nonzero") as usize % d };
        let mut diff = vec![vec![0; q]; q];
        let mut ahead = vec![vec![0u64; q]; d];
        let mut behind = vec![vec![0u64; q]; d];
        for u in 0..q {
            for v in 0..q {
                if u != v {
                    let c = class(field.sub(el[u], el[v]));
                    diff[u][v] = c;
                    ahead[c][v] |= 1 << u;
                    behind[c][u] |= 1 << v;
                }
            }
        }
        Ok(ClassSearch { q, diff, ahead, behind })
    }

    /// All `f` with `class(f(u) - f(v)) = kappa[class(u - v)]` for `u != v`
    /// and `f(x) = y` for each `(x, y)` in `fixed`.
    fn run(&self, kappa: &[usize], fixed: &[(usize, usize)]) -> Vec<Permutation> {
        let full = if self.q == 64 { u64::MAX } else { (1u64 << self.q) - 1 };
        let mut domains = vec![full; self.q];
        for &(x, y) in fixed {
            domains[x] &= 1 << y;
        }
        let mut images = vec![0u32; self.q];
        let mut out = Vec::new();
        self.descend(0, &domains, kappa, &mut images, &mut out);
        out
    }

    fn descend(&self, x: usize, domains: &[u64], kappa: &[usize], images: &mut [u32], out: &mut Vec<Permutation>) {
        if x == self.q {
            out.push(Permutation::from_images_unchecked(images.to_vec()));
            return;
        }
        let mut choices = domains[x];
        while choices != 0 {
            let y = choices.trailing_zeros() as usize;
            choices &= choices - 1;
            let mut next = domains.to_vec();
            next[x] = 1 << y;
            let consistent = (x + 1..self.q).all(|z| {
                next[z] &= self.ahead[kappa[self.diff[z][x]]][y] & self.behind[kappa[self.diff[x][z]]][y];
                next[z] != 0
            });
            if consistent {
                images[x] = y as u32;
                self.descend(x + 1, &next, kappa, images, out);
            }
        }
    }
}

fn check_bound(field: &FiniteField, bound: u64) -> Result<()> {
    if field.order() as u64 > bound {
        return Err(Error::ResourceLimit(format!("q = {} exceeds the search bound {bound}", field.order())));
    }
    Ok(())
}

/// Permutations fixing 0 and 1 that preserve the class of every difference.
fn class_preserving_fixing_zero_one(field: &FiniteField, d: u64) -> Result<Vec<Permutation>> {
    let search = ClassSearch::new(field, d)?;
    let id: Vec<usize> = (0..d as usize).collect();
    let mut found = search.run(&id, &[(0, 0), (1, 1)]);
    found.sort();
    Ok(found)
}

/// Permutations `a` of an odd-order field with `a(0) = 0`, `a(1) = 1` and
/// `chi(a(u) - a(v)) = chi(u - v)` for all `u`, `v`.
pub fn carlitz_permutations(field: &FiniteField) -> Result<Vec<Permutation>> {
    if field.characteristic() == 2 {
        return invalid(format!("q = {} is even", field.order()));
    }
    check_bound(field, CARLITZ_MAX_ORDER)?;
    class_preserving_fixing_zero_one(field, 2)
}

/// The maps `x -> x^(p^j)`, `j` ranging over `exponents`, without repeats.
pub fn frobenius_maps(field: &FiniteField, exponents: &[u32]) -> Vec<Permutation> {
    let mut out: Vec<Permutation> = exponents.iter().map(|&j| frobenius_map(field, j)).collect();
    out.sort();
    out.dedup();
    out
}

/// Search result next to the set it is expected to equal.
#[derive(Clone, Debug)]
pub struct CharacterizationReport {
    pub found: Vec<Permutation>,
    pub predicted: Vec<Permutation>,
}

impl CharacterizationReport {
    pub fn matches(&self) -> bool {
        self.found == self.predicted
    }
}

/// Permutations fixing 0 and 1 preserving the index-`d` class of
/// differences, against `{x -> x^(p^j) : d | p^j - 1}`.
pub fn mcconnel_permutations(field: &FiniteField, d: u64) -> Result<CharacterizationReport> {
    check_index(field, d)?;
    check_bound(field, MCCONNEL_MAX_ORDER)?;
    let found = class_preserving_fixing_zero_one(field, d)?;
    let predicted = frobenius_maps(field, &admissible_frobenius_exponents(field, d));
    Ok(CharacterizationReport { found, predicted })
}

/// Permutations `f` with `class(f(u) - f(v)) = kappa(class(u - v))` for
/// some permutation `kappa` of the classes, and checks on that set.
#[derive(Clone, Debug)]
pub struct NormalizerReport {
    pub members: Vec<Permutation>,
    /// Order of `G(d)`.
    pub subgroup_order: u64,
    /// Closed under composition and contains the identity.
    pub is_group: bool,
    /// Every element of `G(d)` is a member.
    pub contains_subgroup: bool,
    /// Every member conjugates each generator of `G(d)` into `G(d)`.
    pub normalizes: bool,
}

impl NormalizerReport {
    pub fn holds(&self) -> bool {
        self.is_group && self.contains_subgroup && self.normalizes
    }
}

pub fn lenstra_normalizer_members(field: &FiniteField, d: u64) -> Result<NormalizerReport> {
    check_index(field, d)?;
    check_bound(field, LENSTRA_MAX_ORDER)?;
    let search = ClassSearch::new(field, d)?;
    let k = d as usize;
    let sym = if k < 2 {
        PermutationGroup::trivial(k)
    } else {
        let cycle = Permutation::from_fn(k, |i| (i + 1) % k)?;
        let swap = Permutation::from_fn(k, |i| if i < 2 { 1 - i } else { i })?;
        PermutationGroup::from_generators(k, vec![cycle, swap])?
    };
    let mut members = Vec::new();
    for kappa in sym.elements()? {
        let map: Vec<usize> = (0..k).map(|c| kappa.apply(c)).collect();
        members.extend(search.run(&map, &[]));
    }
    members.sort();
    members.dedup();

    let set: HashSet<&Permutation> = members.iter().collect();
    let q = field.order() as usize;
    let is_group = set.contains(&Permutation::identity(q))
        && members.iter().all(|a| members.iter().all(|b| set.contains(&a.then(b))));
    let g = mcconnel_group(field, d)?.group;
    let elements = g.elements()?;
    let contains_subgroup = elements.iter().all(|x| set.contains(x));
    let normalizes = members.iter().all(|f| {
        let f_inv = f.inverse();
        g.generators().iter().all(|s| g.contains(&f_inv.then(s).then(f)))
    });
    Ok(NormalizerReport { members, subgroup_order: elements.len() as u64, is_group, contains_subgroup, normalizes })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(q: u64) -> FiniteField {
        FiniteField::with_order(q).unwrap()
    }

    #[test]
    fn carlitz_small() {
        assert_eq!(carlitz_permutations(&field(13)).unwrap(), vec![Permutation::identity(13)]);
        let f9 = field(9);
        let found = carlitz_permutations(&f9).unwrap();
        assert_eq!(found, frobenius_maps(&f9, &[0, 1]));
        assert!(matches!(carlitz_permutations(&field(53)), Err(Error::ResourceLimit(_))));
        assert!(carlitz_permutations(&field(8)).is_err());
    }

    #[test]
    fn mcconnel_small() {
        assert!(mcconnel_permutations(&field(13), 2).unwrap().matches());
        let r = mcconnel_permutations(&field(9), 2).unwrap();
        assert_eq!(r.found.len(), 2);
        assert!(r.matches());
        let r = mcconnel_permutations(&field(9), 4).unwrap();
        assert_eq!(r.found, vec![Permutation::identity(9)]);
        assert!(r.matches());
        assert!(mcconnel_permutations(&field(13), 5).is_err());
    }

    #[test]
    fn normalizer_of_g2_over_f5() {
        let r = lenstra_normalizer_members(&field(5), 2).unwrap();
        assert!(r.holds());
        assert_eq!(r.subgroup_order, 10);
        assert_eq!(r.members.len(), 20);
    }
}
