//! Paley graphs, Paley tournaments, generalised Paley graphs and Peisert
//! graphs, all as Cayley graphs on the additive group of a finite field.

use crate::arith::gcd;
use crate::error::{invalid, Error, Result};
use crate::field::{FieldElement, FiniteField};
use crate::graph::{cayley_graph, Graph};
use crate::residue::ResidueSet;

/// `P(q)`: `u ~ v` iff `u - v` is a nonzero square. Needs `q = 1 mod 4`.
pub fn paley_graph(field: &FiniteField) -> Result<Graph> {
    let q = field.order() as u64;
    if q % 4 != 1 {
        return invalid(format!(
            "the Paley graph needs q = 1 mod 4, got q = {q}; for q = 3 mod 4 use the Paley tournament"
        ));
    }
    cayley_graph(field, &ResidueSet::new(field, false)?.members())
}

/// `u -> v` iff `v - u` is a nonzero square. Needs `q = 3 mod 4`.
pub fn paley_tournament(field: &FiniteField) -> Result<Graph> {
    let q = field.order() as u64;
    if q % 4 != 3 {
        return invalid(format!("the Paley tournament needs q = 3 mod 4, got q = {q}"));
    }
    cayley_graph(field, &ResidueSet::new(field, false)?.members())
}

/// Connection data of a generalised Paley graph.
#[derive(Clone, Debug)]
pub struct GeneralizedPaleySpec {
    field: FiniteField,
    m: u64,
    subgroup: Vec<FieldElement>,
}

impl GeneralizedPaleySpec {
    /// `D`, the subgroup of order `m` of the multiplicative group, sorted.
    pub fn new(field: &FiniteField, m: u64) -> Result<Self> {
        let q = field.order() as u64;
        if m == 0 || !(q - 1).is_multiple_of(m) {
            return invalid(format!("m = {m} does not divide q - 1 = {}", q - 1));
        }
        if q % 2 == 1 && m % 2 == 1 {
            return invalid(format!("for odd q the subgroup order m must be even, got m = {m}"));
        }
        let d = (q - 1) / m;
        let mut subgroup: Vec<FieldElement> = field.nonzero_elements().map(|x| field.powu(x, d)).collect();
        subgroup.sort();
        subgroup.dedup();
        debug_assert_eq!(subgroup.len() as u64, m);
        Ok(GeneralizedPaleySpec { field: field.clone(), m, subgroup })
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    /// Index `d = (q - 1) / m`.
    pub fn d(&self) -> u64 {
        (self.field.order() as u64 - 1) / self.m
    }

    pub fn subgroup(&self) -> &[FieldElement] {
        &self.subgroup
    }

    /// Whether `d` divides `p - 1`.
    pub fn index_divides_p_minus_one(&self) -> bool {
        (self.field.characteristic() as u64 - 1).is_multiple_of(self.d())
    }

    /// Whether the additive span of `D` is the whole field.
    pub fn generates_additively(&self) -> bool {
        let q = self.field.order() as usize;
        let mut seen = vec![false; q];
        seen[0] = true;
        let mut stack = vec![self.field.zero()];
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &s in &self.subgroup {
                let y = self.field.add(x, s);
                if !seen[y.index()] {
                    seen[y.index()] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count == q
    }
}

/// Cayley graph with connection set the subgroup of order `m`.
pub fn generalized_paley(field: &FiniteField, m: u64) -> Result<(Graph, GeneralizedPaleySpec)> {
    let spec = GeneralizedPaleySpec::new(field, m)?;
    if !spec.generates_additively() {
        return Err(Error::NotConnected(format!(
            "the subgroup of order {m} does not span F_{} additively",
            field.order()
        )));
    }
    let g = cayley_graph(field, &spec.subgroup)?;
    Ok((g, spec))
}

/// Peisert graph for the field's primitive root.
pub fn peisert_graph(field: &FiniteField) -> Result<Graph> {
    peisert_graph_with_root(field, field.primitive_root())
}

/// Cayley graph on `{w^j : j = 0 or 1 mod 4}` for a primitive element `w`.
/// Needs `q = p^(2k)` with `p = 3 mod 4`.
pub fn peisert_graph_with_root(field: &FiniteField, root: FieldElement) -> Result<Graph> {
    let (p, e) = (field.characteristic() as u64, field.degree());
    if p % 4 != 3 || e % 2 != 0 {
        return invalid(format!("Peisert graphs need q = p^(2k) with p = 3 mod 4, got p = {p}, e = {e}"));
    }
    let q = field.order() as u64;
    if root.is_zero() || field.multiplicative_order(root)? != q - 1 {
        return invalid(format!("{root} is not a primitive element of F_{q}"));
    }
    let connection: Vec<FieldElement> = (0..q - 1).filter(|j| j % 4 <= 1).map(|j| field.powu(root, j)).collect();
    cayley_graph(field, &connection)
}

/// All primitive elements of the field, ascending by encoding.
pub fn primitive_elements(field: &FiniteField) -> Vec<FieldElement> {
    let q = field.order() as u64;
    let w = field.primitive_root();
    let mut out: Vec<FieldElement> = (1..q - 1).filter(|&k| gcd(k, q - 1) == 1).map(|k| field.powu(w, k)).collect();
    out.push(w);
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::srg_params;

    fn field(q: u64) -> FiniteField {
        FiniteField::with_order(q).unwrap()
    }

    #[test]
    fn paley_graphs() {
        let p9 = paley_graph(&field(9)).unwrap();
        assert!(!p9.is_directed());
        assert!((0..9).all(|v| p9.degree(v) == 4));
        let p13 = paley_graph(&field(13)).unwrap();
        assert!(p13.is_connected() && (0..13).all(|v| p13.degree(v) == 6));
        assert!(paley_graph(&field(7)).is_err());
    }

    #[test]
    fn paley_tournaments() {
        let t7 = paley_tournament(&field(7)).unwrap();
        assert!(t7.is_tournament() && (0..7).all(|v| t7.degree(v) == 3));
        let t11 = paley_tournament(&field(11)).unwrap();
        assert!((0..11).all(|v| t11.degree(v) == 5));
        assert!(paley_tournament(&field(13)).is_err());
    }

    #[test]
    fn generalized() {
        let f13 = field(13);
        let (g, spec) = generalized_paley(&f13, 6).unwrap();
        assert_eq!(g, paley_graph(&f13).unwrap());
        assert_eq!(spec.d(), 2);
        assert!(spec.index_divides_p_minus_one());

        let (rook, spec9) = generalized_paley(&field(9), 4).unwrap();
        assert_eq!(srg_params(&rook).unwrap().to_string(), "v=9 k=4 lambda=1 mu=2");
        assert!(spec9.index_divides_p_minus_one());
        let (_, spec25) = generalized_paley(&field(25), 8).unwrap();
        assert!(!spec25.index_divides_p_minus_one());
        assert!(spec9.subgroup().iter().all(|&x| field(9).powu(x, 4) == field(9).one()));

        assert!(generalized_paley(&f13, 3).is_err());
        assert!(generalized_paley(&f13, 5).is_err());
        assert_eq!(generalized_paley(&f13, 12).unwrap().0, Graph::complete(13));
        // the subgroup of order 2 of F_9 is {1, -1}, which spans only F_3
        assert!(matches!(generalized_paley(&field(9), 2), Err(Error::NotConnected(_))));
    }

    #[test]
    fn peisert() {
        let p9 = peisert_graph(&field(9)).unwrap();
        assert_eq!(srg_params(&p9).unwrap().to_string(), "v=9 k=4 lambda=1 mu=2");
        assert!(peisert_graph(&field(25)).is_err());
        assert!(peisert_graph(&field(7)).is_err());
        assert!(peisert_graph_with_root(&field(9), field(9).one()).is_err());
        assert_eq!(primitive_elements(&field(9)).len(), 4);
    }
}
