//! The quadratic residue character and the classical sums built from it.

use crate::arith::{centered_residue, is_prime, mod_pow};
use crate::error::{invalid, Result};
use crate::field::{FieldElement, FiniteField};

/// Value of the quadratic residue character.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum CharValue {
    NonResidue,
    Zero,
    Residue,
}

impl CharValue {
    pub fn value(self) -> i64 {
        match self {
            CharValue::NonResidue => -1,
            CharValue::Zero => 0,
            CharValue::Residue => 1,
        }
    }
}

/// The set `S` of non-zero squares, or `S0 = S ∪ {0}`.
#[derive(Clone, Debug)]
pub struct ResidueSet {
    field: FiniteField,
    member: Vec<bool>,
    with_zero: bool,
}

impl ResidueSet {
    pub fn new(field: &FiniteField, with_zero: bool) -> Result<Self> {
        require_odd(field)?;
        let mut member = vec![false; field.order() as usize];
        for x in field.nonzero_elements() {
            member[field.mul(x, x).index()] = true;
        }
        member[0] = with_zero;
        Ok(ResidueSet { field: field.clone(), member, with_zero })
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn with_zero(&self) -> bool {
        self.with_zero
    }

    pub fn contains(&self, x: FieldElement) -> bool {
        self.member[x.index()]
    }

    /// Members in encoding order.
    pub fn members(&self) -> Vec<FieldElement> {
        self.field.elements().filter(|&x| self.contains(x)).collect()
    }

    pub fn len(&self) -> usize {
        self.member.iter().filter(|&&m| m).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Whether the set equals its negative.
    pub fn is_symmetric(&self) -> bool {
        self.field.elements().all(|x| self.contains(x) == self.contains(self.field.neg(x)))
    }
}

/// Tabulated quadratic character of an odd-order field.
///
/// The table is built from the set of squares and cross-checked against
/// Euler's criterion `chi(x) = x^((q-1)/2)` when constructed.
#[derive(Clone, Debug)]
pub struct QuadraticCharacter {
    field: FiniteField,
    table: Vec<CharValue>,
}

impl QuadraticCharacter {
    pub fn new(field: &FiniteField) -> Result<Self> {
        let squares = ResidueSet::new(field, false)?;
        let table: Vec<CharValue> = field
            .elements()
            .map(|x| {
                if x.is_zero() {
                    CharValue::Zero
                } else if squares.contains(x) {
                    CharValue::Residue
                } else {
                    CharValue::NonResidue
                }
            })
            .collect();
        for x in field.elements() {
            assert_eq!(table[x.index()], chi_euler(field, x), "character table disagrees at {x}");
        }
        Ok(QuadraticCharacter { field: field.clone(), table })
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn chi(&self, x: FieldElement) -> CharValue {
        self.table[x.index()]
    }

    pub fn value(&self, x: FieldElement) -> i64 {
        self.table[x.index()].value()
    }
}

fn require_odd(field: &FiniteField) -> Result<()> {
    if field.characteristic() == 2 {
        invalid(format!("the quadratic character needs odd order, got q = {}", field.order()))
    } else {
        Ok(())
    }
}

/// `chi(x)` in an odd-order field.
pub fn chi(field: &FiniteField, x: FieldElement) -> Result<CharValue> {
    require_odd(field)?;
    Ok(chi_euler(field, x))
}

/// Euler's criterion: `x^((q-1)/2)` is `1`, `-1` or `0`.
fn chi_euler(field: &FiniteField, x: FieldElement) -> CharValue {
    if x.is_zero() {
        return CharValue::Zero;
    }
    let h = field.powu(x, (field.order() as u64 - 1) / 2);
    if h == field.one() {
        CharValue::Residue
    } else {
        debug_assert_eq!(h, field.neg(field.one()));
        CharValue::NonResidue
    }
}

/// `sum over w of chi(w - u) chi(w - v)`, by direct summation.
pub fn char_pair_sum(field: &FiniteField, u: FieldElement, v: FieldElement) -> Result<i64> {
    let chi = QuadraticCharacter::new(field)?;
    Ok(char_pair_sum_with(&chi, u, v))
}

pub fn char_pair_sum_with(chi: &QuadraticCharacter, u: FieldElement, v: FieldElement) -> i64 {
    let f = chi.field();
    f.elements().map(|w| chi.value(f.sub(w, u)) * chi.value(f.sub(w, v))).sum()
}

fn require_odd_prime_field(field: &FiniteField) -> Result<()> {
    if !field.is_prime_field() {
        return invalid("this sum is only defined over a prime field");
    }
    require_odd(field)
}

/// Jacobsthal's `phi(e) = sum over m of chi(m) chi(m^2 + e)` over `F_p`.
pub fn jacobsthal_phi(field: &FiniteField, e_arg: FieldElement) -> Result<i64> {
    require_odd_prime_field(field)?;
    let chi = QuadraticCharacter::new(field)?;
    Ok(phi_with(&chi, e_arg))
}

fn phi_with(chi: &QuadraticCharacter, e_arg: FieldElement) -> i64 {
    let f = chi.field();
    f.elements().map(|m| chi.value(m) * chi.value(f.add(f.mul(m, m), e_arg))).sum()
}

fn require_one_mod_four(p: u64) -> Result<()> {
    if !is_prime(p) {
        return invalid(format!("{p} is not prime"));
    }
    if p % 4 != 1 {
        return invalid(format!("{p} is not congruent to 1 mod 4"));
    }
    Ok(())
}

/// `p = a^2 + b^2` with `a = phi(r)/2`, `b = phi(n)/2` for the smallest
/// residue `r` and smallest non-residue `n`. Signs are left as computed.
pub fn two_squares_jacobsthal(p: u64) -> Result<(i64, i64)> {
    require_one_mod_four(p)?;
    let f = FiniteField::new(p, 1)?;
    let chi = QuadraticCharacter::new(&f)?;
    let r = f.nonzero_elements().find(|&x| chi.chi(x) == CharValue::Residue).unwrap();
    let n = f.nonzero_elements().find(|&x| chi.chi(x) == CharValue::NonResidue).unwrap();
    let (phi_r, phi_n) = (phi_with(&chi, r), phi_with(&chi, n));
    debug_assert!(phi_r % 2 == 0 && phi_n % 2 == 0);
    Ok((phi_r / 2, phi_n / 2))
}

/// Gauss's formula for `p = 4k + 1`: `a = <C(2k, k)/2>`, `b = <(2k)! a>`,
/// where `<n>` is the residue of `n` closest to zero. Everything is reduced
/// mod `p` as it is accumulated.
pub fn two_squares_gauss(p: u64) -> Result<(i64, i64)> {
    require_one_mod_four(p)?;
    let k = (p - 1) / 4;
    let mut fact_k = 1u64;
    for i in 1..=k {
        fact_k = fact_k * i % p;
    }
    let mut fact_2k = fact_k;
    for i in k + 1..=2 * k {
        fact_2k = fact_2k * i % p;
    }
    // C(2k, k) = (2k)! / (k!)^2, then halve
    let inv_fact_k = mod_pow(fact_k, p - 2, p);
    let binom = fact_2k * inv_fact_k % p * inv_fact_k % p;
    let half = binom * mod_pow(2, p - 2, p) % p;
    let a = centered_residue(half as i64, p as i64);
    let b = centered_residue((fact_2k as i128 * a as i128).rem_euclid(p as i128) as i64, p as i64);
    Ok((a, b))
}

/// Orders a representation as non-negative `(a, b)` with `a <= b`.
pub fn canonical_two_squares((a, b): (i64, i64)) -> (u64, u64) {
    let (a, b) = (a.unsigned_abs(), b.unsigned_abs());
    (a.min(b), a.max(b))
}

/// `sum over x of chi(x^2 + c)`, by direct summation.
pub fn jacobsthal_identity_sum(field: &FiniteField, c: FieldElement) -> Result<i64> {
    let chi = QuadraticCharacter::new(field)?;
    Ok(field.elements().map(|x| chi.value(field.add(field.mul(x, x), c))).sum())
}

/// `|(T + a) ∩ T|` for `T = S0` (with zero) or `T = S`.
pub fn perron_count(field: &FiniteField, a: FieldElement, with_zero: bool) -> Result<i64> {
    if a.is_zero() {
        return invalid("the shift must be non-zero");
    }
    let set = ResidueSet::new(field, with_zero)?;
    let count = set.members().into_iter().filter(|&s| set.contains(field.add(s, a))).count();
    Ok(count as i64)
}

/// `sum over w in F_p of w^k`, reduced mod `p`.
pub fn power_sum(p: u64, k: u64) -> Result<u64> {
    if !is_prime(p) {
        return invalid(format!("{p} is not prime"));
    }
    if k < 1 {
        return invalid("the exponent must be at least 1");
    }
    Ok((0..p).fold(0, |acc, w| (acc + mod_pow(w, k, p)) % p))
}
