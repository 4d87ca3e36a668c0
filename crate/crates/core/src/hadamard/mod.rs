//! Sign matrices and Hadamard matrix constructions.
//!
//! Paley-type matrices index rows and columns by `infinity, 0, .., q-1`, with
//! the extra index at position 0 and field encodings after it.

mod design;
mod misc;

pub use design::{design_to_matrix, matrix_to_design, pg_design, qr_design, IncidenceDesign, PG_DESIGN_MAX_K};
pub use misc::{compound_counts, is_hadamard_automorphism, paley_coverage, simplex_vertices, CompoundCount, Coverage};

use std::fmt;

use crate::error::{invalid, Error, Result};
use crate::field::FiniteField;
use crate::residue::QuadraticCharacter;

/// Square matrix with entries in `{-1, 0, 1}`, row-major.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SignMatrix {
    order: usize,
    entries: Vec<i8>,
}

impl SignMatrix {
    pub fn new(order: usize, entries: Vec<i8>) -> Result<Self> {
        if entries.len() != order * order {
            return invalid(format!("{} entries for a matrix of order {order}", entries.len()));
        }
        if let Some(x) = entries.iter().find(|x| !(-1..=1).contains(*x)) {
            return invalid(format!("entry {x} is not -1, 0 or 1"));
        }
        Ok(SignMatrix { order, entries })
    }

    /// Entries from `f(row, column)`; values must be `-1`, `0` or `1`.
    pub fn from_fn(order: usize, f: impl Fn(usize, usize) -> i8) -> Result<Self> {
        let entries = (0..order * order).map(|k| f(k / order, k % order)).collect();
        Self::new(order, entries)
    }

    pub fn identity(order: usize) -> Self {
        SignMatrix::from_fn(order, |i, j| (i == j) as i8).unwrap()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[i * self.order + j]
    }

    pub fn row(&self, i: usize) -> &[i8] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[i8]> {
        self.entries.chunks(self.order.max(1)).take(self.order)
    }

    pub fn transpose(&self) -> SignMatrix {
        SignMatrix::from_fn(self.order, |i, j| self.get(j, i)).unwrap()
    }

    pub fn negated(&self) -> SignMatrix {
        SignMatrix { order: self.order, entries: self.entries.iter().map(|x| -x).collect() }
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    pub fn is_skew_symmetric(&self) -> bool {
        self.transpose() == self.negated()
    }

    pub fn has_zero_entry(&self) -> bool {
        self.entries.contains(&0)
    }

    /// Exact integer product `self * other`.
    pub fn product(&self, other: &SignMatrix) -> Result<Vec<Vec<i64>>> {
        if self.order != other.order {
            return invalid("matrix orders differ");
        }
        let n = self.order;
        Ok((0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|k| self.get(i, k) as i64 * other.get(k, j) as i64).sum()).collect())
            .collect())
    }

    /// `order m` followed by `m` lines over `+`, `-` (and `0`).
    pub fn to_text(&self) -> String {
        let mut s = format!("order {}\n", self.order);
        for row in self.rows() {
            s.extend(row.iter().map(|&x| match x {
                1 => '+',
                -1 => '-',
                _ => '0',
            }));
            s.push('\n');
        }
        s
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty matrix file".into()))?;
        let order: usize = header
            .strip_prefix("order")
            .and_then(|r| r.trim().parse().ok())
            .ok_or_else(|| Error::Parse(format!("expected `order m`, found `{header}`")))?;
        let mut entries = Vec::with_capacity(order * order);
        let mut count = 0;
        for line in lines {
            count += 1;
            let before = entries.len();
            for c in line.chars() {
                entries.push(match c {
                    '+' => 1,
                    '-' => -1,
                    '0' => 0,
                    _ => return Err(Error::Parse(format!("unexpected character `{c}` in row {count}"))),
                });
            }
            if entries.len() - before != order {
                return Err(Error::Parse(format!(
                    "row {count} has {} entries, expected {order}",
                    entries.len() - before
                )));
            }
        }
        if count != order {
            return Err(Error::Parse(format!("found {count} rows, expected {order}")));
        }
        Self::new(order, entries)
    }
}

impl fmt::Display for SignMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// First pair of rows `i < j` that are not orthogonal, or `None` when
/// `H H^T = m I`. Zero entries are rejected. Rows are packed as bitmasks of
/// their `-1` positions, so a dot product is `m - 2 |a xor b|`.
pub fn hadamard_defect(h: &SignMatrix) -> Result<Option<(usize, usize)>> {
    if h.has_zero_entry() {
        return invalid("a Hadamard matrix has no zero entries");
    }
    let words = h.order.div_ceil(64);
    let packed: Vec<Vec<u64>> = h
        .rows()
        .map(|row| {
            let mut bits = vec![0u64; words];
            for (j, &x) in row.iter().enumerate() {
                if x < 0 {
                    bits[j / 64] |= 1 << (j % 64);
                }
            }
            bits
        })
        .collect();
    for i in 0..h.order {
        for j in i + 1..h.order {
            let differ: u32 = packed[i].iter().zip(&packed[j]).map(|(a, b)| (a ^ b).count_ones()).sum();
            if 2 * differ as usize != h.order {
                return Ok(Some((i, j)));
            }
        }
    }
    Ok(None)
}

pub fn is_hadamard(h: &SignMatrix) -> Result<bool> {
    Ok(hadamard_defect(h)?.is_none())
}

fn require_hadamard(h: &SignMatrix) -> Result<()> {
    match hadamard_defect(h) {
        Ok(None) => Ok(()),
        Ok(Some((i, j))) => invalid(format!("not a Hadamard matrix: rows {i} and {j} are not orthogonal")),
        Err(e) => Err(e),
    }
}

/// `Q` with `(u, v)` entry `chi(v - u)`.
pub fn jacobsthal_matrix(field: &FiniteField) -> Result<SignMatrix> {
    let chi = QuadraticCharacter::new(field)?;
    let q = field.order() as usize;
    let el: Vec<_> = field.elements().collect();
    SignMatrix::from_fn(q, |u, v| chi.value(field.sub(el[v], el[u])) as i8)
}

/// Order `2^k`, the `k`-fold Kronecker power of `[[1, 1], [1, -1]]`.
pub fn sylvester(k: u32) -> SignMatrix {
    let h2 = SignMatrix::new(2, vec![1, 1, 1, -1]).unwrap();
    (0..k).fold(SignMatrix::identity(1), |h, _| kronecker_unchecked(&h2, &h))
}

pub fn kronecker(a: &SignMatrix, b: &SignMatrix) -> Result<SignMatrix> {
    require_hadamard(a)?;
    require_hadamard(b)?;
    Ok(kronecker_unchecked(a, b))
}

fn kronecker_unchecked(a: &SignMatrix, b: &SignMatrix) -> SignMatrix {
    let m = b.order;
    SignMatrix::from_fn(a.order * m, |i, j| a.get(i / m, j / m) * b.get(i % m, j % m)).unwrap()
}

fn paley_field(q: u64, residue: u64) -> Result<FiniteField> {
    if q % 4 != residue {
        return invalid(format!("this construction needs q = {residue} mod 4, got q = {q}"));
    }
    FiniteField::with_order(q)
}

/// `[[1, R], [R^T, Q - I]]` for `q = 3 mod 4`.
pub fn paley_i(q: u64) -> Result<SignMatrix> {
    let field = paley_field(q, 3)?;
    let jac = jacobsthal_matrix(&field)?;
    SignMatrix::from_fn(q as usize + 1, |i, j| match (i, j) {
        (0, _) | (_, 0) => 1,
        _ => jac.get(i - 1, j - 1) - (i == j) as i8,
    })
}

/// For `q = 1 mod 4`: `B = [[0, R], [R^T, Q]]` with each `+-1` replaced by
/// `+-[[1, 1], [1, -1]]` and each `0` by `[[1, -1], [-1, -1]]`.
pub fn paley_ii(q: u64) -> Result<SignMatrix> {
    let field = paley_field(q, 1)?;
    let jac = jacobsthal_matrix(&field)?;
    let b = |i: usize, j: usize| -> i8 {
        match (i, j) {
            (0, 0) => 0,
            (0, _) | (_, 0) => 1,
            _ => jac.get(i - 1, j - 1),
        }
    };
    SignMatrix::from_fn(2 * (q as usize + 1), |i, j| {
        let (r, c) = (i % 2, j % 2);
        match b(i / 2, j / 2) {
            0 => {
                if r == 0 && c == 0 {
                    1
                } else {
                    -1
                }
            }
            s => {
                if r == 1 && c == 1 {
                    -s
                } else {
                    s
                }
            }
        }
    })
}

/// Largest `k` accepted by [`paley_iii`].
pub const PALEY_III_MAX_K: u32 = 4;

/// The `2^m / m` Hadamard matrices, `m = 2^k`, whose row sets partition
/// `{+1, -1}^m`: the cosets of the row group of `sylvester(k)` under
/// entrywise multiplication. Sign vectors are bitmasks (bit `j` set for a
/// `-1` in column `j`), where entrywise multiplication is XOR.
pub fn paley_iii(k: u32) -> Result<Vec<SignMatrix>> {
    if k < 2 {
        return invalid(format!("k must be at least 2, got {k}"));
    }
    if k > PALEY_III_MAX_K {
        return Err(Error::ResourceLimit(format!("k = {k} exceeds the bound {PALEY_III_MAX_K}")));
    }
    let m = 1usize << k;
    let group: Vec<u32> = (0..m)
        .map(|i| (0..m).filter(|&j| (i & j).count_ones() % 2 == 1).fold(0u32, |mask, j| mask | (1 << j)))
        .collect();
    let total = 1usize << m;
    let mut seen = vec![false; total];
    let mut out = Vec::with_capacity(total / m);
    for v in 0..total {
        if seen[v] {
            continue;
        }
        let mut entries = Vec::with_capacity(m * m);
        for &g in &group {
            let w = v ^ g as usize;
            seen[w] = true;
            entries.extend((0..m).map(|j| if w >> j & 1 == 1 { -1i8 } else { 1 }));
        }
        out.push(SignMatrix { order: m, entries });
    }
    Ok(out)
}

/// Negates rows to make column 0 positive, then columns to make row 0
/// positive.
pub fn normalize(h: &SignMatrix) -> Result<SignMatrix> {
    require_hadamard(h)?;
    let rows = SignMatrix::from_fn(h.order, |i, j| h.get(i, j) * h.get(i, 0))?;
    SignMatrix::from_fn(h.order, |i, j| rows.get(i, j) * rows.get(0, j))
}

pub fn is_normalized(h: &SignMatrix) -> bool {
    (0..h.order).all(|i| h.get(0, i) == 1 && h.get(i, 0) == 1)
}
