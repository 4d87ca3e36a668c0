//! Brute-force oracles shared by the integration tests. Each one is a
//! direct transcription of a definition, independent of the library's
//! algorithm for the same quantity.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use paley::graph::Graph;
use paley::hadamard::SignMatrix;
use paley::perm::Permutation;
use paley::{FieldElement, FiniteField};

pub fn field(q: u64) -> FiniteField {
    FiniteField::with_order(q).unwrap()
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Prime powers `q` with `lo <= q <= hi`, by trial division.
pub fn prime_powers(lo: u64, hi: u64) -> Vec<u64> {
    (lo.max(2)..=hi)
        .filter(|&q| {
            let p = (2..=q).find(|d| q % d == 0).unwrap();
            let mut r = q;
            while r % p == 0 {
                r /= p;
            }
            r == 1
        })
        .collect()
}

pub fn odd_prime_powers(lo: u64, hi: u64) -> Vec<u64> {
    prime_powers(lo, hi).into_iter().filter(|q| q % 2 == 1).collect()
}

/// `(p, e)` with `q = p^e`.
pub fn split(q: u64) -> (u64, u32) {
    let p = (2..=q).find(|d| q.is_multiple_of(*d)).unwrap();
    let mut e = 0;
    let mut r = q;
    while r > 1 {
        r /= p;
        e += 1;
    }
    (p, e)
}

/// Quadratic character read off the set of squares `{x * x}`.
pub fn chi_by_squares(f: &FiniteField) -> Vec<i64> {
    let squares: HashSet<FieldElement> = f.nonzero_elements().map(|x| f.mul(x, x)).collect();
    f.elements()
        .map(|x| {
            if x.is_zero() {
                0
            } else if squares.contains(&x) {
                1
            } else {
                -1
            }
        })
        .collect()
}

/// `log_w(x)` for every nonzero `x`, by walking the powers of the primitive root.
pub fn discrete_logs(f: &FiniteField) -> Vec<Option<u32>> {
    let mut logs = vec![None; f.order() as usize];
    let w = f.primitive_root();
    let mut x = f.one();
    for k in 0..f.order() - 1 {
        assert!(logs[x.index()].is_none(), "primitive root has small order");
        logs[x.index()] = Some(k);
        x = f.mul(x, w);
    }
    logs
}

/// `(lambda, mu)` by counting common neighbours of every pair, if constant.
pub fn brute_lambda_mu(g: &Graph) -> Option<(usize, usize, usize)> {
    let n = g.vertex_count();
    let degrees: BTreeSet<usize> = (0..n).map(|u| (0..n).filter(|&v| g.has_edge(u, v)).count()).collect();
    let (mut lambdas, mut mus) = (BTreeSet::new(), BTreeSet::new());
    for u in 0..n {
        for v in u + 1..n {
            let common = (0..n).filter(|&w| g.has_edge(u, w) && g.has_edge(v, w)).count();
            if g.has_edge(u, v) {
                lambdas.insert(common);
            } else {
                mus.insert(common);
            }
        }
    }
    match (degrees.len(), lambdas.len(), mus.len()) {
        (1, 1, 1) => Some((*degrees.first()?, *lambdas.first()?, *mus.first()?)),
        _ => None,
    }
}

pub fn preserves_arcs(g: &Graph, images: &[usize]) -> bool {
    let n = g.vertex_count();
    (0..n).all(|u| (0..n).all(|v| g.has_edge(u, v) == g.has_edge(images[u], images[v])))
}

/// All products of the generators, by breadth-first search over image vectors.
pub fn closure(degree: usize, generators: &[Permutation]) -> HashSet<Vec<usize>> {
    let gens: Vec<Vec<usize>> = generators.iter().map(|g| g.images().collect()).collect();
    let id: Vec<usize> = (0..degree).collect();
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in &gens {
            let y: Vec<usize> = x.iter().map(|&i| g[i]).collect();
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

/// `H H^T = m I`, by plain dot products.
pub fn orthogonal_rows(h: &SignMatrix) -> bool {
    let m = h.order();
    (0..m).all(|i| {
        (0..m).all(|j| {
            let dot: i64 = h.row(i).iter().zip(h.row(j)).map(|(&a, &b)| a as i64 * b as i64).sum();
            dot == if i == j { m as i64 } else { 0 }
        })
    })
}

/// Calls `f` on every arrangement of `items`, by Heap's algorithm.
pub fn for_each_permutation(items: &[usize], mut f: impl FnMut(&[usize])) {
    let mut a = items.to_vec();
    let mut c = vec![0; a.len()];
    f(&a);
    let mut i = 0;
    while i < a.len() {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            f(&a);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}
