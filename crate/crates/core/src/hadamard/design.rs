use std::fmt;

use super::{hadamard_defect, normalize, SignMatrix};
use crate::error::{invalid, Error, Result};
use crate::field::FiniteField;
use crate::graph::Bitset;
use crate::residue::ResidueSet;

/// A design with `4n - 1` points and `4n - 1` blocks of size `2n - 1`, any
/// two blocks meeting in `n - 1` points. Blocks are kept sorted, each block
/// ascending, so equality is equality up to block order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IncidenceDesign {
    points: usize,
    blocks: Vec<Vec<usize>>,
    n: usize,
}

impl IncidenceDesign {
    pub fn new(points: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        if points % 4 != 3 {
            return invalid(format!("{points} points is not of the form 4n - 1"));
        }
        let n = (points + 1) / 4;
        if blocks.len() != points {
            return invalid(format!("{} blocks, expected {points}", blocks.len()));
        }
        let mut sorted = Vec::with_capacity(blocks.len());
        for block in blocks {
            let mut b = block;
            b.sort_unstable();
            if b.windows(2).any(|w| w[0] == w[1]) || b.last().is_some_and(|&x| x >= points) {
                return invalid(format!("block {b:?} has repeated or out-of-range points"));
            }
            if b.len() != 2 * n - 1 {
                return invalid(format!("block {b:?} has size {}, expected {}", b.len(), 2 * n - 1));
            }
            sorted.push(b);
        }
        sorted.sort();
        let masks: Vec<Bitset> = sorted.iter().map(|b| Bitset::from_iter_with_len(points, b.iter().copied())).collect();
        for i in 0..points {
            for j in i + 1..points {
                let meet = masks[i].intersection_count(&masks[j]);
                if meet != n - 1 {
                    return invalid(format!("blocks {i} and {j} meet in {meet} points, expected {}", n - 1));
                }
            }
        }
        Ok(IncidenceDesign { points, blocks: sorted, n })
    }

    pub fn point_count(&self) -> usize {
        self.points
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `(4n - 1, 2n - 1, n - 1)`.
    pub fn parameters(&self) -> (usize, usize, usize) {
        (4 * self.n - 1, 2 * self.n - 1, self.n - 1)
    }

    /// `points P blocks B`, then one block per line.
    pub fn to_text(&self) -> String {
        let mut s = format!("points {} blocks {}\n", self.points, self.blocks.len());
        for b in &self.blocks {
            let line: Vec<String> = b.iter().map(usize::to_string).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty design file".into()))?;
        let words: Vec<&str> = header.split_whitespace().collect();
        let (points, count) = match words.as_slice() {
            ["points", p, "blocks", b] => (
                p.parse::<usize>().map_err(|e| Error::Parse(e.to_string()))?,
                b.parse::<usize>().map_err(|e| Error::Parse(e.to_string()))?,
            ),
            _ => return Err(Error::Parse(format!("expected `points P blocks B`, found `{header}`"))),
        };
        let blocks = lines
            .map(|l| {
                l.split_whitespace()
                    .map(|w| w.parse::<usize>().map_err(|e| Error::Parse(format!("`{w}`: {e}"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        if blocks.len() != count {
            return Err(Error::Parse(format!("found {} blocks, header says {count}", blocks.len())));
        }
        Self::new(points, blocks)
    }
}

impl fmt::Display for IncidenceDesign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Normalises, drops the first row and column, and reads the `+1` entries
/// of row `i` as block `i` on the column points.
pub fn matrix_to_design(h: &SignMatrix) -> Result<IncidenceDesign> {
    let m = h.order();
    if m < 4 || !m.is_multiple_of(4) {
        return invalid(format!("order {m} is not a positive multiple of 4"));
    }
    let h = normalize(h)?;
    let blocks = (1..m).map(|i| (1..m).filter(|&j| h.get(i, j) == 1).map(|j| j - 1).collect()).collect();
    IncidenceDesign::new(m - 1, blocks)
}

/// The normalised Hadamard matrix of order `4n` of a design.
pub fn design_to_matrix(d: &IncidenceDesign) -> SignMatrix {
    let m = d.points + 1;
    let h = SignMatrix::from_fn(m, |i, j| {
        if i == 0 || j == 0 || d.blocks[i - 1].binary_search(&(j - 1)).is_ok() {
            1
        } else {
            -1
        }
    })
    .unwrap();
    debug_assert_eq!(hadamard_defect(&h).unwrap(), None);
    h
}

/// Points `F_q`, blocks the translates `S + v` of the nonzero squares.
/// Needs `q = 3 mod 4`.
pub fn qr_design(q: u64) -> Result<IncidenceDesign> {
    if q % 4 != 3 {
        return invalid(format!("the quadratic residue design needs q = 3 mod 4, got q = {q}"));
    }
    let field = FiniteField::with_order(q)?;
    let squares = ResidueSet::new(&field, false)?.members();
    let blocks = field.elements().map(|v| squares.iter().map(|&s| field.add(s, v).index()).collect()).collect();
    IncidenceDesign::new(q as usize, blocks)
}

/// Largest `k` accepted by [`pg_design`].
pub const PG_DESIGN_MAX_K: u32 = 10;

/// Hyperplanes of `PG(k-1, 2)`. Point `x - 1` is the nonzero vector `x` of
/// `F_2^k` as a bitmask; the block of functional `a` is its kernel.
pub fn pg_design(k: u32) -> Result<IncidenceDesign> {
    if !(2..=PG_DESIGN_MAX_K).contains(&k) {
        return invalid(format!("k must lie in 2..={PG_DESIGN_MAX_K}, got {k}"));
    }
    let top = 1usize << k;
    let blocks =
        (1..top).map(|a| (1..top).filter(|&x| (a & x).count_ones() % 2 == 0).map(|x| x - 1).collect()).collect();
    IncidenceDesign::new(top - 1, blocks)
}
