//! Executable checks of the library's headline claims, each reported as a
//! PASS/FAIL line with expected and computed values.

use std::fmt;

use num_bigint::BigUint;

use crate::arith::{is_prime, prime_power};
use crate::error::Result;
use crate::family::{generalized_paley, paley_graph, paley_tournament, peisert_graph};
use crate::field::{FieldElement, FiniteField};
use crate::graph::{are_isomorphic, delta_uv, is_delta_graph, is_self_complementary, srg_params, SrgParams};
use crate::hadamard::{
    compound_counts, design_to_matrix, is_hadamard, jacobsthal_matrix, matrix_to_design, normalize, paley_coverage,
    paley_i, paley_ii, paley_iii, pg_design, qr_design, simplex_vertices, sylvester, IncidenceDesign, SignMatrix,
};
use crate::perm::{
    carlitz_permutations, check_paley_automorphism_group, design_automorphisms, frobenius_maps, graph_automorphisms,
    mcconnel_group, mcconnel_permutations, tournament_automorphisms,
};
use crate::residue::{
    canonical_two_squares, jacobsthal_phi, two_squares_gauss, two_squares_jacobsthal, QuadraticCharacter,
};

/// A quadratic character supplied in place of the library's own.
pub type CharacterFn = fn(&FiniteField, FieldElement) -> i64;

/// Expected multiples of 4 up to 200 with no Paley-type construction.
pub const COVERAGE_EXCEPTIONS: [u64; 5] = [92, 116, 156, 184, 188];

/// Module names accepted by [`VerifyOptions::only`].
pub const MODULES: [&str; 5] = ["residue_sums", "graph_core", "hadamard", "perm_groups", "paley_family"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claim {
    /// Acceptance criterion number, when the check is one of them.
    pub id: Option<u32>,
    pub module: &'static str,
    pub key: &'static str,
    pub statement: &'static str,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

impl Claim {
    fn new(id: Option<u32>, module: &'static str, key: &'static str, statement: &'static str) -> Self {
        Claim { id, module, key, statement, expected: String::new(), computed: String::new(), pass: false }
    }

    fn outcome(mut self, expected: impl Into<String>, computed: impl Into<String>, pass: bool) -> Self {
        self.expected = expected.into();
        self.computed = computed.into();
        self.pass = pass;
        self
    }

    fn failed(self, expected: impl Into<String>, err: crate::Error) -> Self {
        self.outcome(expected, format!("error: {err}"), false)
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.pass { "PASS" } else { "FAIL" };
        match self.id {
            Some(id) => write!(f, "{status} [{id:02}] {}", self.key)?,
            None => write!(f, "{status} {}", self.key)?,
        }
        write!(f, " expected={} computed={}", self.expected, self.computed)
    }
}

#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    /// Replacement for the quadratic character in the character-sum claim.
    pub character: Option<CharacterFn>,
    /// Restricts [`run_claims`] to one module.
    pub only: Option<String>,
}

/// Number of acceptance criteria.
pub const CLAIM_COUNT: u32 = 18;

const CLAIM_MODULES: [&str; CLAIM_COUNT as usize] = [
    "residue_sums",
    "graph_core",
    "residue_sums",
    "hadamard",
    "hadamard",
    "hadamard",
    "hadamard",
    "hadamard",
    "perm_groups",
    "perm_groups",
    "perm_groups",
    "perm_groups",
    "paley_family",
    "paley_family",
    "perm_groups",
    "graph_core",
    "hadamard",
    "hadamard",
];

/// Runs every acceptance claim, or those of `options.only`.
pub fn run_claims(options: &VerifyOptions) -> Vec<Claim> {
    (1..=CLAIM_COUNT)
        .filter(|&id| options.only.as_deref().is_none_or(|m| CLAIM_MODULES[id as usize - 1] == m))
        .map(|id| claim(id, options))
        .collect()
}

/// One acceptance claim by number.
pub fn claim(id: u32, options: &VerifyOptions) -> Claim {
    match id {
        1 => character_sums(options.character),
        2 => srg_parameters(),
        3 => two_squares(),
        4 => jacobsthal_identities(),
        5 => hadamard_constructions(),
        6 => paley_partition(),
        7 => coverage(),
        8 => designs(),
        9 => design_groups(),
        10 => paley_groups(),
        11 => carlitz(),
        12 => mcconnel(),
        13 => hamming(),
        14 => peisert(),
        15 => tournaments(),
        16 => delta_graphs(),
        17 => compounds(),
        18 => simplices(),
        _ => panic!("no claim numbered {id}"),
    }
}

/// Plain-text table of claims.
pub fn format_table(claims: &[Claim]) -> String {
    let mut s = String::new();
    for c in claims {
        let status = if c.pass { "PASS" } else { "FAIL" };
        let id = c.id.map_or("--".to_string(), |i| format!("{i:02}"));
        s.push_str(&format!(
            "{status} | {id} | {:<13} | {:<24} | {} | expected: {} | computed: {}\n",
            c.module, c.key, c.statement, c.expected, c.computed
        ));
    }
    let passed = claims.iter().filter(|c| c.pass).count();
    s.push_str(&format!("{passed}/{} claims pass\n", claims.len()));
    s
}

fn odd_prime_powers(limit: u64) -> Vec<u64> {
    (3..=limit).step_by(2).filter(|&q| prime_power(q).is_some()).collect()
}

fn prime_powers_mod4(limit: u64, r: u64) -> Vec<u64> {
    odd_prime_powers(limit).into_iter().filter(|q| q % 4 == r).collect()
}

fn field(q: u64) -> Result<FiniteField> {
    FiniteField::with_order(q)
}

fn set_text<T: fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    let parts: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

fn character_sums(character: Option<CharacterFn>) -> Claim {
    let c = Claim::new(Some(1), "residue_sums", "character-sums", "pair sums of the quadratic character");
    let qs = odd_prime_powers(49);
    let run = || -> Result<Option<String>> {
        for &q in &qs {
            let f = field(q)?;
            let table = QuadraticCharacter::new(&f)?;
            let chi = |x: FieldElement| character.map_or_else(|| table.value(x), |c| c(&f, x));
            for u in f.elements() {
                for v in f.elements() {
                    let sum: i64 = f.elements().map(|x| chi(f.sub(x, u)) * chi(f.sub(x, v))).sum();
                    let want = if u == v { q as i64 - 1 } else { -1 };
                    if sum != want {
                        return Ok(Some(format!("q={q} u={u} v={v} sum={sum}")));
                    }
                }
            }
        }
        Ok(None)
    };
    let expected = format!("q-1 on the diagonal, -1 off it, {} fields", qs.len());
    match run() {
        Ok(None) => c.outcome(expected, format!("holds for all {} fields", qs.len()), true),
        Ok(Some(bad)) => c.outcome(expected, format!("fails at {bad}"), false),
        Err(e) => c.failed(expected, e),
    }
}

fn srg_parameters() -> Claim {
    let c = Claim::new(Some(2), "graph_core", "srg-parameters", "Paley graph parameters");
    let qs = prime_powers_mod4(101, 1);
    let expected = format!("(q, (q-1)/2, (q-5)/4, (q-1)/4) for {} values of q", qs.len());
    for &q in &qs {
        let g = match field(q).and_then(|f| paley_graph(&f)) {
            Ok(g) => g,
            Err(e) => return c.failed(expected, e),
        };
        let q = q as usize;
        let want = SrgParams { v: q, k: (q - 1) / 2, lambda: (q - 5) / 4, mu: (q - 1) / 4 };
        match srg_params(&g) {
            Ok(p) if p == want => {}
            Ok(p) => return c.outcome(expected, format!("q={q}: {p}"), false),
            Err(why) => return c.outcome(expected, format!("q={q}: {why}"), false),
        }
    }
    c.outcome(expected, format!("all {} match", qs.len()), true)
}

fn two_squares() -> Claim {
    let c = Claim::new(Some(3), "residue_sums", "two-squares", "sums of two squares for p = 1 mod 4");
    let primes: Vec<u64> = (5..=1000).filter(|&p| p % 4 == 1 && is_prime(p)).collect();
    let expected = format!("a^2 + b^2 = p by both methods for {} primes; phi(1)=6, phi(2)=-4 at p=13", primes.len());
    let run = || -> Result<Option<String>> {
        for &p in &primes {
            let oracle = (0..).take_while(|a| 2 * a * a <= p).find_map(|a| {
                let b = ((p - a * a) as f64).sqrt().round() as u64;
                (a * a + b * b == p).then_some((a, b))
            });
            for (name, pair) in [("jacobsthal", two_squares_jacobsthal(p)?), ("gauss", two_squares_gauss(p)?)] {
                if pair.0 * pair.0 + pair.1 * pair.1 != p as i64 || Some(canonical_two_squares(pair)) != oracle {
                    return Ok(Some(format!("p={p} {name} gave {pair:?}")));
                }
            }
        }
        let f13 = field(13)?;
        let (phi1, phi2) = (jacobsthal_phi(&f13, f13.from_int(1))?, jacobsthal_phi(&f13, f13.from_int(2))?);
        let pair = canonical_two_squares(two_squares_jacobsthal(13)?);
        if (phi1, phi2, pair) != (6, -4, (2, 3)) {
            return Ok(Some(format!("p=13 phi(1)={phi1} phi(2)={phi2} squares={pair:?}")));
        }
        Ok(None)
    };
    match run() {
        Ok(None) => c.outcome(expected, "all hold; 13 = 3^2 + 2^2", true),
        Ok(Some(bad)) => c.outcome(expected, bad, false),
        Err(e) => c.failed(expected, e),
    }
}

fn jacobsthal_identities() -> Claim {
    let c = Claim::new(Some(4), "hadamard", "jacobsthal-matrix", "row sums, Q Q^T and symmetry type");
    let qs = odd_prime_powers(49);
    let expected = format!("QJ = JQ = 0, QQ^T = qI - J, symmetric iff q = 1 mod 4, {} fields", qs.len());
    for &q in &qs {
        let m = match field(q).and_then(|f| jacobsthal_matrix(&f)) {
            Ok(m) => m,
            Err(e) => return c.failed(expected, e),
        };
        let n = q as usize;
        let sums_zero = (0..n).all(|i| (0..n).map(|j| m.get(i, j) as i64).sum::<i64>() == 0)
            && (0..n).all(|j| (0..n).map(|i| m.get(i, j) as i64).sum::<i64>() == 0);
        let gram = m.product(&m.transpose()).unwrap();
        let gram_ok = (0..n).all(|i| (0..n).all(|j| gram[i][j] == if i == j { q as i64 - 1 } else { -1 }));
        let shape_ok = if q % 4 == 1 { m.is_symmetric() } else { m.is_skew_symmetric() };
        if !(sums_zero && gram_ok && shape_ok) {
            return c.outcome(expected, format!("q={q}: sums={sums_zero} gram={gram_ok} symmetry={shape_ok}"), false);
        }
    }
    c.outcome(expected, format!("all {} hold", qs.len()), true)
}

fn hadamard_constructions() -> Claim {
    let c = Claim::new(Some(5), "hadamard", "hadamard-constructions", "Sylvester and Paley I/II matrices");
    let expected = "sylvester k<=10, paley I q<=103, paley II q<=101 (symmetric) all Hadamard";
    let run = || -> Result<Option<String>> {
        for k in 0..=10 {
            if !is_hadamard(&sylvester(k))? {
                return Ok(Some(format!("sylvester({k})")));
            }
        }
        for q in prime_powers_mod4(103, 3) {
            if !is_hadamard(&paley_i(q)?)? {
                return Ok(Some(format!("paley I q={q}")));
            }
        }
        for q in prime_powers_mod4(101, 1) {
            let h = paley_ii(q)?;
            if !is_hadamard(&h)? || !h.is_symmetric() {
                return Ok(Some(format!("paley II q={q}")));
            }
        }
        Ok(None)
    };
    match run() {
        Ok(None) => c.outcome(expected, "all Hadamard", true),
        Ok(Some(bad)) => c.outcome(expected, format!("fails at {bad}"), false),
        Err(e) => c.failed(expected, e),
    }
}

fn paley_partition() -> Claim {
    let c = Claim::new(Some(6), "hadamard", "paley-partition", "Hadamard matrices partitioning all sign vectors");
    let expected = "k=2,3,4: 4, 32, 4096 Hadamard matrices partitioning {+-1}^m";
    let mut counts = Vec::new();
    for k in 2..=4u32 {
        let m = 1usize << k;
        let mats = match paley_iii(k) {
            Ok(v) => v,
            Err(e) => return c.failed(expected, e),
        };
        let mut seen = vec![false; 1 << m];
        let mut disjoint = true;
        for h in &mats {
            for row in h.rows() {
                let mask = row.iter().enumerate().fold(0usize, |acc, (j, &x)| acc | (((x < 0) as usize) << j));
                disjoint &= !std::mem::replace(&mut seen[mask], true);
            }
        }
        let covers = seen.iter().all(|&s| s);
        let all_hadamard = mats.iter().all(|h| is_hadamard(h).unwrap_or(false));
        if mats.len() != (1 << m) / m || !disjoint || !covers || !all_hadamard {
            return c.outcome(
                expected,
                format!("k={k}: count={} disjoint={disjoint} covers={covers} hadamard={all_hadamard}", mats.len()),
                false,
            );
        }
        counts.push(mats.len());
    }
    c.outcome(expected, format!("counts {counts:?}, partitions verified"), true)
}

fn coverage() -> Claim {
    let c = Claim::new(Some(7), "hadamard", "order-coverage", "orders up to 200 missed by Paley's constructions");
    let expected = set_text(COVERAGE_EXCEPTIONS);
    match paley_coverage(200) {
        Ok(cov) => {
            let pass = cov.exceptions == COVERAGE_EXCEPTIONS;
            c.outcome(expected, set_text(cov.exceptions), pass)
        }
        Err(e) => c.failed(expected, e),
    }
}

fn check_design(d: &IncidenceDesign, n: usize) -> bool {
    let blocks = d.blocks();
    blocks.len() == 4 * n - 1
        && d.point_count() == 4 * n - 1
        && blocks.iter().all(|b| b.len() == 2 * n - 1)
        && (0..blocks.len())
            .all(|i| (i + 1..blocks.len()).all(|j| blocks[i].iter().filter(|x| blocks[j].contains(x)).count() == n - 1))
        && matrix_to_design(&design_to_matrix(d)).as_ref() == Ok(d)
}

fn designs() -> Claim {
    let c = Claim::new(Some(8), "hadamard", "designs", "Hadamard design parameters and round trips");
    let expected = "(4n-1, 2n-1, n-1) for paley I and QR designs q in {3,7,11,19,23}, PG k in {2,3,4}";
    let run = || -> Result<Option<String>> {
        for q in [3u64, 7, 11, 19, 23] {
            let n = (q as usize + 1) / 4;
            if !check_design(&matrix_to_design(&paley_i(q)?)?, n) || !check_design(&qr_design(q)?, n) {
                return Ok(Some(format!("q={q}")));
            }
        }
        for k in 2..=4u32 {
            if !check_design(&pg_design(k)?, 1 << (k - 2)) {
                return Ok(Some(format!("PG k={k}")));
            }
        }
        Ok(None)
    };
    match run() {
        Ok(None) => c.outcome(expected, "all verified", true),
        Ok(Some(bad)) => c.outcome(expected, format!("fails at {bad}"), false),
        Err(e) => c.failed(expected, e),
    }
}

fn design_groups() -> Claim {
    let c = Claim::new(Some(9), "perm_groups", "design-automorphisms", "automorphism groups of QR designs");
    let expected = "q=7: 168, q=11: 660, q=19: 171";
    let mut computed = Vec::new();
    for q in [7u64, 11, 19] {
        match qr_design(q).and_then(|d| design_automorphisms(&d)) {
            Ok(g) => computed.push(format!("q={q}: {}", g.order())),
            Err(e) => return c.failed(expected, e),
        }
    }
    let computed = computed.join(", ");
    let pass = computed == expected;
    c.outcome(expected, computed, pass)
}

fn semilinear_order(q: u64) -> BigUint {
    let e = prime_power(q).map_or(1, |(_, e)| e as u64);
    BigUint::from(q * (q - 1) * e / 2)
}

fn paley_groups() -> Claim {
    let c = Claim::new(Some(10), "perm_groups", "paley-automorphisms", "Paley graph groups are semilinear");
    let qs = [9u64, 13, 17, 25, 29];
    let expected: Vec<String> = qs.iter().map(|&q| format!("{q}:{}", semilinear_order(q))).collect();
    let mut computed = Vec::new();
    let mut pass = true;
    for q in qs {
        match check_paley_automorphism_group(q) {
            Ok(r) => {
                pass &= r.groups_equal() && r.automorphism_order == semilinear_order(q);
                let tag = if r.groups_equal() { "" } else { " (differs)" };
                computed.push(format!("{q}:{}{tag}", r.automorphism_order));
            }
            Err(e) => return c.failed(expected.join(" "), e),
        }
    }
    c.outcome(format!("{} with two-sided containment", expected.join(" ")), computed.join(" "), pass)
}

fn carlitz() -> Claim {
    let c = Claim::new(Some(11), "perm_groups", "carlitz", "character-preserving maps fixing 0 and 1");
    let cases = [(5u64, 1usize), (13, 1), (17, 1), (9, 2), (25, 2)];
    let expected: Vec<String> = cases.iter().map(|(q, n)| format!("{q}:{n}")).collect();
    let mut computed = Vec::new();
    let mut pass = true;
    for (q, want) in cases {
        let f = match field(q) {
            Ok(f) => f,
            Err(e) => return c.failed(expected.join(" "), e),
        };
        match carlitz_permutations(&f) {
            Ok(found) => {
                let e: Vec<u32> = (0..f.degree()).collect();
                pass &= found.len() == want && found == frobenius_maps(&f, &e);
                computed.push(format!("{q}:{}", found.len()));
            }
            Err(e) => return c.failed(expected.join(" "), e),
        }
    }
    c.outcome(format!("{} Frobenius maps", expected.join(" ")), computed.join(" "), pass)
}

fn mcconnel() -> Claim {
    let c = Claim::new(Some(12), "perm_groups", "mcconnel", "maps preserving a coset class of differences");
    let cases = [(13u64, 2u64), (13, 3), (13, 4), (9, 2), (9, 4), (25, 2)];
    let mut computed = Vec::new();
    let mut pass = true;
    for (q, d) in cases {
        match field(q).and_then(|f| mcconnel_permutations(&f, d)) {
            Ok(r) => {
                pass &= r.matches();
                computed.push(format!("({q},{d}):{}/{}", r.found.len(), r.predicted.len()));
            }
            Err(e) => return c.failed("found = predicted", e),
        }
    }
    c.outcome("found = predicted Frobenius set for 6 cases", computed.join(" "), pass)
}

fn hamming() -> Claim {
    let c = Claim::new(Some(13), "paley_family", "hamming-exception", "group of the subgroup-4 graph over F_9");
    match field(9).and_then(|f| generalized_paley(&f, 4)).and_then(|(g, _)| graph_automorphisms(&g)) {
        Ok(g) => {
            let pass = g.order_u64() == Some(72);
            c.outcome("72", g.order().to_string(), pass)
        }
        Err(e) => c.failed("72", e),
    }
}

fn peisert() -> Claim {
    let c = Claim::new(Some(14), "paley_family", "peisert-49", "Peisert graph of order 49");
    let expected = "v=49 k=24 lambda=11 mu=12, self-complementary, not isomorphic to P(49) (stable)";
    let run = || -> Result<(String, bool)> {
        let f = field(49)?;
        let g = peisert_graph(&f)?;
        let params = srg_params(&g).map(|p| p.to_string()).unwrap_or_else(|why| why.to_string());
        let self_comp = is_self_complementary(&g)?.is_some();
        let p49 = paley_graph(&f)?;
        let first = are_isomorphic(&g, &p49)?.is_some();
        let second = are_isomorphic(&g, &p49)?.is_some();
        let pass = params == "v=49 k=24 lambda=11 mu=12" && self_comp && !first && first == second;
        let iso = if first { "isomorphic" } else { "not isomorphic" };
        let stable = if first == second { "stable" } else { "unstable" };
        Ok((format!("{params}, self-complementary={self_comp}, {iso} to P(49) ({stable})"), pass))
    };
    match run() {
        Ok((computed, pass)) => c.outcome(expected, computed, pass),
        Err(e) => c.failed(expected, e),
    }
}

fn tournaments() -> Claim {
    let c = Claim::new(Some(15), "perm_groups", "tournament-automorphisms", "Paley tournament groups");
    let qs = [7u64, 11, 19, 23, 27];
    let expected: Vec<String> = qs.iter().map(|&q| format!("{q}:{}", semilinear_order(q))).collect();
    let mut computed = Vec::new();
    let mut pass = true;
    for q in qs {
        match field(q).and_then(|f| paley_tournament(&f)).and_then(|t| tournament_automorphisms(&t)) {
            Ok(g) => {
                let order = g.order().clone();
                pass &= order == semilinear_order(q) && order.bit(0);
                computed.push(format!("{q}:{order}"));
            }
            Err(e) => return c.failed(expected.join(" "), e),
        }
    }
    c.outcome(format!("{} (all odd)", expected.join(" ")), computed.join(" "), pass)
}

fn delta_graphs() -> Claim {
    let c = Claim::new(Some(16), "graph_core", "delta-graph", "Delta_uv constant on Paley graphs");
    let run = || -> Result<Option<String>> {
        for q in [5u64, 13, 17] {
            let g = paley_graph(&field(q)?)?;
            let n = q as usize;
            for u in 0..n {
                for v in u + 1..n {
                    let d = delta_uv(&g, u, v)?;
                    if d != (n - 1) / 2 {
                        return Ok(Some(format!("q={q} u={u} v={v} delta={d}")));
                    }
                }
            }
            if !is_delta_graph(&g)? {
                return Ok(Some(format!("q={q} not a Delta-graph")));
            }
        }
        Ok(None)
    };
    let expected = "(q-1)/2 for all pairs, q in {5,13,17}";
    match run() {
        Ok(None) => c.outcome(expected, "holds; all are Delta-graphs", true),
        Ok(Some(bad)) => c.outcome(expected, bad, false),
        Err(e) => c.failed(expected, e),
    }
}

fn compounds() -> Claim {
    let c = Claim::new(Some(17), "hadamard", "compound-counts", "counts d1 and D from the group order");
    let expected = "(2,168): 30 480; (3,660): 60480 10321920";
    let mut computed = Vec::new();
    for (n, order) in [(2u64, 168u32), (3, 660)] {
        match compound_counts(n, &BigUint::from(order)) {
            Ok(cc) => computed.push(format!("({n},{order}): {} {}", cc.d1, cc.d)),
            Err(e) => return c.failed(expected, e),
        }
    }
    let computed = computed.join("; ");
    let pass = computed == expected;
    c.outcome(expected, computed, pass)
}

fn simplices() -> Claim {
    let c = Claim::new(Some(18), "hadamard", "simplex-vertices", "simplex from a normalised Hadamard matrix");
    let expected = "pairwise dot -1 for orders 4, 8, 12, 16";
    let run = || -> Result<Option<String>> {
        let mats: [SignMatrix; 4] = [sylvester(2), sylvester(3), normalize(&paley_i(11)?)?, sylvester(4)];
        for h in &mats {
            let vs = simplex_vertices(h)?;
            for i in 0..vs.len() {
                for j in i + 1..vs.len() {
                    let dot: i64 = vs[i].iter().zip(&vs[j]).map(|(&a, &b)| (a * b) as i64).sum();
                    if dot != -1 {
                        return Ok(Some(format!("order {}: vertices {i},{j} dot {dot}", h.order())));
                    }
                }
            }
        }
        Ok(None)
    };
    match run() {
        Ok(None) => c.outcome(expected, "all -1", true),
        Ok(Some(bad)) => c.outcome(expected, bad, false),
        Err(e) => c.failed(expected, e),
    }
}

/// Carlitz search for one field against the full Frobenius set.
pub fn verify_carlitz(field: &FiniteField) -> Result<Vec<Claim>> {
    let found = carlitz_permutations(field)?;
    let e: Vec<u32> = (0..field.degree()).collect();
    let predicted = frobenius_maps(field, &e);
    let c = Claim::new(None, "perm_groups", "carlitz", "character-preserving maps fixing 0 and 1");
    let pass = found == predicted;
    Ok(vec![c.outcome(
        format!("{} maps x -> x^(p^i)", predicted.len()),
        format!("{} maps{}", found.len(), if pass { ", all Frobenius" } else { ", set differs" }),
        pass,
    )])
}

/// Order and two-sided containment for `Aut P(q)` against the semilinear group.
pub fn verify_paley_group(q: u64) -> Result<Vec<Claim>> {
    let r = check_paley_automorphism_group(q)?;
    let order = Claim::new(None, "perm_groups", "order", "order of Aut P(q)");
    let order_pass = r.automorphism_order == semilinear_order(q);
    let contain = Claim::new(None, "perm_groups", "containment", "each group's generators lie in the other");
    let contain_computed =
        format!("aut in semilinear={}, semilinear in aut={}", r.automorphisms_in_affine, r.affine_in_automorphisms);
    Ok(vec![
        order.outcome(semilinear_order(q).to_string(), r.automorphism_order.to_string(), order_pass),
        contain.outcome("both", contain_computed, r.automorphisms_in_affine && r.affine_in_automorphisms),
    ])
}

/// The class-preserving search, the group order by direct count, and the
/// closed-form order `m q gcd(m, e)`, which may disagree with the count.
pub fn verify_mcconnel(field: &FiniteField, d: u64) -> Result<Vec<Claim>> {
    let r = mcconnel_permutations(field, d)?;
    let g = mcconnel_group(field, d)?;
    let maps = Claim::new(None, "perm_groups", "maps", "maps fixing 0 and 1");
    let direct = Claim::new(None, "perm_groups", "order-direct", "order against admissible exponents");
    let formula = Claim::new(None, "perm_groups", "order-formula", "order against m q gcd(m, e)");
    let order = g.group.order().to_string();
    Ok(vec![
        maps.outcome(format!("{} Frobenius maps", r.predicted.len()), format!("{} found", r.found.len()), r.matches()),
        direct.outcome(g.direct_count.to_string(), order.clone(), g.order_matches_direct_count()),
        formula.outcome(g.formula_count.to_string(), order, g.order_matches_formula()),
    ])
}

/// Table-1 coverage up to 200.
pub fn verify_coverage() -> Vec<Claim> {
    vec![coverage()]
}
