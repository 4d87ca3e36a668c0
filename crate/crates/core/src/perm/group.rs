use std::collections::{HashSet, VecDeque};

use num_bigint::BigUint;

use super::Permutation;
use crate::error::{invalid, Error, Result};

/// Largest group whose elements [`PermutationGroup::elements`] will list.
pub const ENUMERATION_LIMIT: usize = 1_000_000;

#[derive(Clone, Debug)]
struct Level {
    base: usize,
    /// `transversal[x]` maps the base point to `x`, for `x` in the orbit.
    transversal: Vec<Option<Permutation>>,
    inverse: Vec<Option<Permutation>>,
    orbit: Vec<usize>,
}

/// A permutation group with an exact order, held as a stabiliser chain.
#[derive(Clone, Debug)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    strong: Vec<Permutation>,
    chain: Vec<Level>,
    order: BigUint,
}

impl PermutationGroup {
    pub fn trivial(degree: usize) -> Self {
        PermutationGroup {
            degree,
            generators: Vec::new(),
            strong: Vec::new(),
            chain: Vec::new(),
            order: BigUint::from(1u32),
        }
    }

    /// Group generated by `generators`, via deterministic Schreier-Sims.
    pub fn from_generators(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        check_degrees(degree, &generators)?;
        let mut strong: Vec<Permutation> = generators.iter().filter(|g| !g.is_identity()).cloned().collect();
        let mut base: Vec<usize> = Vec::new();
        for s in &strong {
            if base.iter().all(|&b| s.apply(b) == b) {
                base.push(s.first_moved_point().unwrap());
            }
        }
        let mut chain: Vec<Level> =
            (0..base.len()).map(|l| build_level(degree, base[l], &stabilising(&strong, &base[..l]))).collect();
        let mut i = base.len() as isize - 1;
        while i >= 0 {
            let level = i as usize;
            let level_gens = stabilising(&strong, &base[..level]);
            chain[level] = build_level(degree, base[level], &level_gens);

            let mut extended = None;
            'scan: for &beta in &chain[level].orbit {
                for s in &level_gens {
                    let image = s.apply(beta);
                    let schreier = chain[level].transversal[beta]
                        .as_ref()
                        .unwrap()
                        .then(s)
                        .then(chain[level].inverse[image].as_ref().unwrap());
                    let (residue, stop) = strip(&chain[level + 1..], &schreier);
                    let stop = stop + level + 1;
                    if stop < base.len() || !residue.is_identity() {
                        extended = Some((residue, stop));
                        break 'scan;
                    }
                }
            }
            match extended {
                Some((residue, stop)) => {
                    strong.push(residue);
                    if stop == base.len() {
                        let point = strong.last().unwrap().first_moved_point().unwrap();
                        base.push(point);
                        chain.push(build_level(degree, point, &stabilising(&strong, &base[..stop])));
                    }
                    // the residue moves base[stop], so deeper levels are unchanged
                    i = stop as isize;
                }
                None => i -= 1,
            }
        }
        let order = chain.iter().fold(BigUint::from(1u32), |acc, l| acc * l.orbit.len());
        Ok(PermutationGroup { degree, generators, strong, chain, order })
    }

    /// Builds the chain from a base and a strong generating set relative to
    /// it, without the Schreier-Sims closure test.
    pub(crate) fn from_base_and_strong_generators(
        degree: usize,
        base: &[usize],
        generators: Vec<Permutation>,
    ) -> Result<Self> {
        check_degrees(degree, &generators)?;
        let chain: Vec<Level> = (0..base.len())
            .map(|i| build_level(degree, base[i], &stabilising(&generators, &base[..i])))
            .filter(|l| l.orbit.len() > 1)
            .collect();
        let order = chain.iter().fold(BigUint::from(1u32), |acc, l| acc * l.orbit.len());
        Ok(PermutationGroup { degree, strong: generators.clone(), generators, chain, order })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Generators together with the Schreier generators added to them.
    pub fn strong_generators(&self) -> &[Permutation] {
        &self.strong
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }

    pub fn order_u64(&self) -> Option<u64> {
        u64::try_from(&self.order).ok()
    }

    pub fn base(&self) -> Vec<usize> {
        self.chain.iter().map(|l| l.base).collect()
    }

    /// Point stabiliser orbit lengths along the base.
    pub fn basic_orbit_lengths(&self) -> Vec<usize> {
        self.chain.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        if p.degree() != self.degree {
            return false;
        }
        let (residue, stop) = strip(&self.chain, p);
        stop == self.chain.len() && residue.is_identity()
    }

    /// Every generator of `self` lies in `other`.
    pub fn is_subgroup_of(&self, other: &PermutationGroup) -> bool {
        self.generators.iter().all(|g| other.contains(g))
    }

    /// Breadth-first closure of the generators; independent of the chain.
    pub fn elements(&self) -> Result<Vec<Permutation>> {
        closure(self.degree, &self.generators, ENUMERATION_LIMIT)
    }

    pub fn orbit(&self, point: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        seen[point] = true;
        let mut queue = VecDeque::from([point]);
        while let Some(x) = queue.pop_front() {
            for g in &self.generators {
                let y = g.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        (0..self.degree).filter(|&x| seen[x]).collect()
    }

    /// Orbits on points, each sorted, ordered by smallest member.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut done = vec![false; self.degree];
        let mut out = Vec::new();
        for x in 0..self.degree {
            if !done[x] {
                let o = self.orbit(x);
                for &y in &o {
                    done[y] = true;
                }
                out.push(o);
            }
        }
        out
    }

    /// Orbit of an ordered pair.
    pub fn pair_orbit(&self, pair: (usize, usize)) -> Vec<(usize, usize)> {
        let n = self.degree;
        let mut seen = vec![false; n * n];
        seen[pair.0 * n + pair.1] = true;
        let mut queue = VecDeque::from([pair]);
        let mut out = vec![pair];
        while let Some((a, b)) = queue.pop_front() {
            for g in &self.generators {
                let img = (g.apply(a), g.apply(b));
                if !seen[img.0 * n + img.1] {
                    seen[img.0 * n + img.1] = true;
                    queue.push_back(img);
                    out.push(img);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Orbit lengths of the stabiliser of `point`, ascending. The stabiliser
    /// orbit of `x` is read off the orbit of the pair `(point, x)`.
    pub fn suborbit_lengths(&self, point: usize) -> Vec<usize> {
        let mut done = vec![false; self.degree];
        let mut lengths = Vec::new();
        for x in 0..self.degree {
            if done[x] {
                continue;
            }
            let members: Vec<usize> =
                self.pair_orbit((point, x)).into_iter().filter(|&(a, _)| a == point).map(|(_, b)| b).collect();
            for &y in &members {
                done[y] = true;
            }
            lengths.push(members.len());
        }
        lengths.sort_unstable();
        lengths
    }
}

fn check_degrees(degree: usize, gens: &[Permutation]) -> Result<()> {
    match gens.iter().find(|g| g.degree() != degree) {
        Some(g) => invalid(format!("generator of degree {} in a group of degree {degree}", g.degree())),
        None => Ok(()),
    }
}

fn stabilising(gens: &[Permutation], points: &[usize]) -> Vec<Permutation> {
    gens.iter().filter(|g| points.iter().all(|&b| g.apply(b) == b)).cloned().collect()
}

fn build_level(degree: usize, base: usize, gens: &[Permutation]) -> Level {
    let mut transversal: Vec<Option<Permutation>> = vec![None; degree];
    transversal[base] = Some(Permutation::identity(degree));
    let mut orbit = vec![base];
    let mut k = 0;
    while k < orbit.len() {
        let x = orbit[k];
        k += 1;
        for g in gens {
            let y = g.apply(x);
            if transversal[y].is_none() {
                transversal[y] = Some(transversal[x].as_ref().unwrap().then(g));
                orbit.push(y);
            }
        }
    }
    let inverse = transversal.iter().map(|t| t.as_ref().map(Permutation::inverse)).collect();
    Level { base, transversal, inverse, orbit }
}

/// Sifts `p` through `levels`; returns the residue and the index of the
/// first level where the base image left the orbit (or `levels.len()`).
fn strip(levels: &[Level], p: &Permutation) -> (Permutation, usize) {
    let mut h = p.clone();
    for (i, level) in levels.iter().enumerate() {
        let x = h.apply(level.base);
        match &level.inverse[x] {
            Some(t_inv) => h = h.then(t_inv),
            None => return (h, i),
        }
    }
    (h, levels.len())
}

/// Breadth-first closure under right multiplication by generators.
pub(crate) fn closure(degree: usize, gens: &[Permutation], limit: usize) -> Result<Vec<Permutation>> {
    let id = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut out = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.then(g);
            if seen.insert(y.clone()) {
                if seen.len() > limit {
                    return Err(Error::ResourceLimit(format!("group has more than {limit} elements")));
                }
                out.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    out.sort();
    Ok(out)
}
