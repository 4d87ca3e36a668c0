use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::{is_normalized, require_hadamard, SignMatrix};
use crate::arith::prime_power;
use crate::error::{invalid, Result};

/// Orders up to a limit reachable as `2^a`, `2^a (q + 1)` with `q = 3 mod 4`,
/// or `2^a 2 (q + 1)` with `q = 1 mod 4`, for prime powers `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coverage {
    pub limit: u64,
    /// Achievable multiples of 4, ascending.
    pub achievable: Vec<u64>,
    /// Multiples of 4 not achieved, ascending.
    pub exceptions: Vec<u64>,
}

pub fn paley_coverage(limit: u64) -> Result<Coverage> {
    if limit < 4 {
        return invalid(format!("limit must be at least 4, got {limit}"));
    }
    let mut reachable = vec![false; limit as usize + 1];
    let mut mark = |base: u64| {
        let mut m = base;
        while m <= limit {
            reachable[m as usize] = true;
            m *= 2;
        }
    };
    mark(1);
    for q in 3..=limit {
        if prime_power(q).is_none() {
            continue;
        }
        match q % 4 {
            3 => mark(q + 1),
            1 => mark(2 * (q + 1)),
            _ => {}
        }
    }
    let (achievable, exceptions) = (4..=limit).step_by(4).partition(|&m| reachable[m as usize]);
    Ok(Coverage { limit, achievable, exceptions })
}

/// Counts attached to a Hadamard design with automorphism group order `N`:
/// `d1 = (4n - 1)! / N` and `D = 2^(4n - 3) d1 / n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompoundCount {
    pub n: u64,
    pub group_order: BigUint,
    pub d1: BigUint,
    pub d: BigUint,
}

pub fn compound_counts(n: u64, group_order: &BigUint) -> Result<CompoundCount> {
    if n == 0 || group_order.is_zero() {
        return invalid("n and the group order must be positive");
    }
    let factorial: BigUint = (1..=4 * n - 1).map(BigUint::from).product();
    if !(&factorial % group_order).is_zero() {
        return invalid(format!("{group_order} does not divide ({})!", 4 * n - 1));
    }
    let d1 = factorial / group_order;
    let scaled = (BigUint::one() << (4 * n - 3)) * &d1;
    if !(&scaled % n).is_zero() {
        return invalid(format!("{n} does not divide 2^{} d1", 4 * n - 3));
    }
    Ok(CompoundCount { n, group_order: group_order.clone(), d1, d: scaled / n })
}

/// Rows of a normalised Hadamard matrix with the first column removed.
pub fn simplex_vertices(h: &SignMatrix) -> Result<Vec<Vec<i8>>> {
    require_hadamard(h)?;
    if !is_normalized(h) {
        return invalid("the matrix must be normalised");
    }
    Ok(h.rows().map(|r| r[1..].to_vec()).collect())
}

/// Signed permutation: exactly one `+-1` in every row and column.
fn check_monomial(p: &SignMatrix) -> Result<()> {
    let n = p.order();
    let ok_rows = (0..n).all(|i| (0..n).filter(|&j| p.get(i, j) != 0).count() == 1);
    let ok_cols = (0..n).all(|j| (0..n).filter(|&i| p.get(i, j) != 0).count() == 1);
    if ok_rows && ok_cols {
        Ok(())
    } else {
        invalid("not a monomial matrix with entries +-1")
    }
}

/// Whether `P H Q^T = H`.
pub fn is_hadamard_automorphism(h: &SignMatrix, p: &SignMatrix, q: &SignMatrix) -> Result<bool> {
    if p.order() != h.order() || q.order() != h.order() {
        return invalid("matrix orders differ");
    }
    check_monomial(p)?;
    check_monomial(q)?;
    let ph = p.product(h)?;
    let n = h.order();
    Ok((0..n).all(|i| (0..n).all(|j| (0..n).map(|k| ph[i][k] * q.get(j, k) as i64).sum::<i64>() == h.get(i, j) as i64)))
}
