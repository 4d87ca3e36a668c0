//! Exact arithmetic in the finite field `F_q`, `q = p^e`.
//!
//! Elements are encoded as integers `0..q`. Read in base `p`, the digits of an
//! encoding are the coefficients of the canonical polynomial representative,
//! least significant digit first, so encoding `0` is zero, `1` is one and the
//! prime subfield occupies encodings `0..p`. Because encodings are dense they
//! double as vertex labels for the graphs built over the field.
//!
//! The modulus is the lexicographically smallest monic irreducible polynomial
//! of degree `e` (coefficients compared from the highest degree down) and the
//! fixed primitive root is the smallest encoding of multiplicative order
//! `q - 1`. Both choices are pure functions of `(p, e)`.

use std::fmt;
use std::sync::Arc;

use crate::arith::{is_prime, prime_factors, prime_power};
use crate::error::{invalid, Error, Result};

/// Largest supported field order.
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

/// An element of a [`FiniteField`], identified by its base-`p` encoding.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement(u32);

impl FieldElement {
    pub fn encoding(self) -> u32 {
        self.0
    }

    /// The encoding as a vertex index.
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub(crate) fn from_index(i: usize) -> Self {
        FieldElement(i as u32)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct Inner {
    p: u32,
    e: u32,
    q: u32,
    /// `e + 1` coefficients, constant term first, leading coefficient 1.
    modulus: Vec<u32>,
    omega: u32,
    /// `exp[k] = omega^k` for `0 <= k < q - 1`.
    exp: Vec<u32>,
    /// `log[x]` is the discrete logarithm of `x != 0` to base omega.
    log: Vec<u32>,
}

/// The finite field of order `p^e`. Cloning is cheap; the tables are shared.
#[derive(Clone)]
pub struct FiniteField {
    inner: Arc<Inner>,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteField")
            .field("p", &self.inner.p)
            .field("e", &self.inner.e)
            .field("modulus", &self.inner.modulus)
            .field("omega", &self.inner.omega)
            .finish()
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.inner.p == other.inner.p && self.inner.e == other.inner.e && self.inner.modulus == other.inner.modulus
    }
}

impl Eq for FiniteField {}

impl FiniteField {
    /// Builds `F_{p^e}`.
    pub fn new(p: u64, e: u32) -> Result<Self> {
        if !is_prime(p) {
            return invalid(format!("{p} is not prime"));
        }
        if e < 1 {
            return invalid("extension degree must be at least 1");
        }
        let q = (p as u128).checked_pow(e).filter(|&q| q <= MAX_FIELD_ORDER as u128);
        let Some(q) = q else {
            return invalid(format!("{p}^{e} exceeds the supported order {MAX_FIELD_ORDER}"));
        };
        let p = p as u32;
        let q = q as u32;
        let modulus = smallest_irreducible(p, e);
        let helper = PolyArith { p, e, modulus: &modulus };
        let omega = find_primitive_root(&helper, q);

        let images = helper.basis_images(omega);
        let mut exp = Vec::with_capacity(q as usize - 1);
        let mut log = vec![0u32; q as usize];
        let mut x = 1u32;
        for k in 0..q - 1 {
            exp.push(x);
            log[x as usize] = k;
            x = helper.apply_linear(&images, x);
        }
        debug_assert_eq!(x, 1, "omega must have order q - 1");

        Ok(FiniteField { inner: Arc::new(Inner { p, e, q, modulus, omega, exp, log }) })
    }

    /// Builds the field of order `q`, which must be a prime power.
    pub fn with_order(q: u64) -> Result<Self> {
        match prime_power(q) {
            Some((p, e)) => Self::new(p, e),
            None => invalid(format!("{q} is not a prime power")),
        }
    }

    pub fn characteristic(&self) -> u32 {
        self.inner.p
    }

    pub fn degree(&self) -> u32 {
        self.inner.e
    }

    pub fn order(&self) -> u32 {
        self.inner.q
    }

    pub fn is_prime_field(&self) -> bool {
        self.inner.e == 1
    }

    /// Modulus coefficients, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.inner.modulus
    }

    /// The fixed primitive root.
    pub fn primitive_root(&self) -> FieldElement {
        FieldElement(self.inner.omega)
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    pub fn element(&self, encoding: u32) -> Result<FieldElement> {
        if encoding < self.inner.q {
            Ok(FieldElement(encoding))
        } else {
            invalid(format!("{encoding} is not an element of F_{}", self.inner.q))
        }
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> FieldElement {
        FieldElement(n.rem_euclid(self.inner.p as i64) as u32)
    }

    /// All elements in encoding order, starting with zero.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.inner.q).map(FieldElement)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = FieldElement> {
        (1..self.inner.q).map(FieldElement)
    }

    pub fn add(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        let p = self.inner.p;
        if p == 2 {
            return FieldElement(x.0 ^ y.0);
        }
        let (mut a, mut b) = (x.0, y.0);
        let mut out = 0;
        let mut place = 1;
        while a > 0 || b > 0 {
            out += (a % p + b % p) % p * place;
            a /= p;
            b /= p;
            place *= p;
        }
        FieldElement(out)
    }

    pub fn neg(&self, x: FieldElement) -> FieldElement {
        let p = self.inner.p;
        if p == 2 {
            return x;
        }
        let mut a = x.0;
        let mut out = 0;
        let mut place = 1;
        while a > 0 {
            out += (p - a % p) % p * place;
            a /= p;
            place *= p;
        }
        FieldElement(out)
    }

    pub fn sub(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        self.add(x, self.neg(y))
    }

    pub fn mul(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        if x.0 == 0 || y.0 == 0 {
            return FieldElement(0);
        }
        let n = self.inner.q as u64 - 1;
        let k = (self.inner.log[x.index()] as u64 + self.inner.log[y.index()] as u64) % n;
        FieldElement(self.inner.exp[k as usize])
    }

    pub fn inv(&self, x: FieldElement) -> Result<FieldElement> {
        if x.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let n = self.inner.q - 1;
        let k = (n - self.inner.log[x.index()]) % n;
        Ok(FieldElement(self.inner.exp[k as usize]))
    }

    /// `x^k` for any integer `k`; negative powers invert first.
    pub fn pow(&self, x: FieldElement, k: i64) -> Result<FieldElement> {
        if k >= 0 {
            Ok(self.powu(x, k as u64))
        } else {
            let y = self.inv(x)?;
            Ok(self.powu(y, k.unsigned_abs()))
        }
    }

    /// `x^k` for a non-negative exponent; `0^0 = 1`.
    pub fn powu(&self, x: FieldElement, k: u64) -> FieldElement {
        if k == 0 {
            return FieldElement(1);
        }
        if x.0 == 0 {
            return FieldElement(0);
        }
        let n = self.inner.q as u64 - 1;
        let l = self.inner.log[x.index()] as u64 % n;
        let k = k % n;
        FieldElement(self.inner.exp[((l as u128 * k as u128) % n as u128) as usize])
    }

    /// `omega^k`.
    pub fn exp(&self, k: i64) -> FieldElement {
        let n = self.inner.q as i64 - 1;
        FieldElement(self.inner.exp[k.rem_euclid(n) as usize])
    }

    /// Discrete logarithm to base omega, in `0..q-1`.
    pub fn log(&self, x: FieldElement) -> Result<u32> {
        if x.0 == 0 {
            return invalid("zero has no discrete logarithm");
        }
        Ok(self.inner.log[x.index()])
    }

    /// Multiplicative order of a non-zero element.
    pub fn multiplicative_order(&self, x: FieldElement) -> Result<u64> {
        let l = self.log(x)? as u64;
        let n = self.inner.q as u64 - 1;
        Ok(n / crate::arith::gcd(l, n))
    }

    /// `x^(p^j)`, the `j`-th power of the Frobenius automorphism.
    ///
    /// Panics unless `j < e`.
    pub fn frobenius(&self, x: FieldElement, j: u32) -> FieldElement {
        assert!(j < self.inner.e, "frobenius exponent {j} must be below the degree {}", self.inner.e);
        self.powu(x, (self.inner.p as u64).pow(j))
    }

    /// Text block used by `field info`.
    pub fn description(&self) -> String {
        let coeffs: Vec<String> = self.inner.modulus.iter().rev().map(|c| c.to_string()).collect();
        format!(
            "p={}\ne={}\nq={}\nmodulus={}\nomega={}\n",
            self.inner.p,
            self.inner.e,
            self.inner.q,
            coeffs.join(" "),
            self.inner.omega
        )
    }

    /// Product computed directly from polynomial multiplication modulo the
    /// modulus, bypassing the logarithm tables.
    pub fn mul_by_polynomials(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        let helper = PolyArith { p: self.inner.p, e: self.inner.e, modulus: &self.inner.modulus };
        FieldElement(helper.mul(x.0, y.0))
    }
}

/// Polynomial arithmetic on encodings, used to build the field tables.
struct PolyArith<'a> {
    p: u32,
    e: u32,
    modulus: &'a [u32],
}

impl PolyArith<'_> {
    fn digits(&self, mut x: u32) -> Vec<u32> {
        let mut d = vec![0; self.e as usize];
        for slot in d.iter_mut() {
            *slot = x % self.p;
            x /= self.p;
        }
        d
    }

    fn encode(&self, digits: &[u32]) -> u32 {
        digits.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    fn mul(&self, x: u32, y: u32) -> u32 {
        let e = self.e as usize;
        let p = self.p as u64;
        let a = self.digits(x);
        let b = self.digits(y);
        let mut prod = vec![0u64; 2 * e];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + ai as u64 * bj as u64) % p;
            }
        }
        for deg in (e..2 * e).rev() {
            let c = prod[deg] % p;
            if c == 0 {
                continue;
            }
            prod[deg] = 0;
            // x^e = -(m_0 + ... + m_{e-1} x^{e-1})
            for i in 0..e {
                let m = self.modulus[i] as u64;
                prod[deg - e + i] = (prod[deg - e + i] + (p - c) * m) % p;
            }
        }
        let low: Vec<u32> = prod[..e].iter().map(|&c| c as u32).collect();
        self.encode(&low)
    }

    fn pow(&self, x: u32, mut k: u64) -> u32 {
        let mut acc = 1;
        let mut base = x;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// Encodings of `c * x^i` for `i < e`.
    fn basis_images(&self, c: u32) -> Vec<u32> {
        (0..self.e).map(|i| self.mul(c, self.p.pow(i))).collect()
    }

    /// Applies the F_p-linear map with the given basis images.
    fn apply_linear(&self, images: &[u32], x: u32) -> u32 {
        if self.p == 2 {
            return images.iter().enumerate().filter(|(i, _)| x >> i & 1 == 1).fold(0, |acc, (_, &img)| acc ^ img);
        }
        let e = self.e as usize;
        let mut acc = vec![0u32; e];
        for (i, &xi) in self.digits(x).iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (slot, d) in acc.iter_mut().zip(self.digits(images[i])) {
                *slot = (*slot + xi * d) % self.p;
            }
        }
        self.encode(&acc)
    }
}

fn poly_rem(mut a: Vec<u32>, b: &[u32], p: u32) -> Vec<u32> {
    // b is monic
    let db = b.len() - 1;
    while a.len() > db {
        let c = *a.last().unwrap() % p;
        let shift = a.len() - 1 - db;
        if c != 0 {
            for (i, &bi) in b.iter().enumerate() {
                a[shift + i] = (a[shift + i] + (p - c) * bi % p) % p;
            }
        }
        a.pop();
    }
    a
}

/// Monic polynomial of degree `deg` whose lower coefficients are the base-`p`
/// digits of `t`; increasing `t` is lexicographic order from the top.
fn monic_from_index(p: u32, deg: u32, mut t: u32) -> Vec<u32> {
    let mut c = Vec::with_capacity(deg as usize + 1);
    for _ in 0..deg {
        c.push(t % p);
        t /= p;
    }
    c.push(1);
    c
}

fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let deg = poly.len() as u32 - 1;
    for d in 1..=deg / 2 {
        for t in 0..p.pow(d) {
            let divisor = monic_from_index(p, d, t);
            if poly_rem(poly.to_vec(), &divisor, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn smallest_irreducible(p: u32, e: u32) -> Vec<u32> {
    (0..p.pow(e))
        .map(|t| monic_from_index(p, e, t))
        .find(|poly| is_irreducible(poly, p))
        .expect("an irreducible polynomial of every degree exists")
}

fn find_primitive_root(helper: &PolyArith<'_>, q: u32) -> u32 {
    let n = q as u64 - 1;
    let factors = prime_factors(n);
    (1..q)
        .find(|&c| factors.iter().all(|&r| helper.pow(c, n / r) != 1))
        .expect("the multiplicative group of a finite field is cyclic")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_order(f: &FiniteField, x: FieldElement) -> u64 {
        let mut y = x;
        let mut k = 1;
        while y != f.one() {
            y = f.mul_by_polynomials(y, x);
            k += 1;
        }
        k
    }

    #[test]
    fn f13_primitive_root_is_two() {
        let f = FiniteField::new(13, 1).unwrap();
        assert_eq!(f.primitive_root().encoding(), 2);
        // the smallest element of order 12, by direct order computation
        let first = (1..13).map(|c| f.element(c).unwrap()).find(|&x| brute_order(&f, x) == 12).unwrap();
        assert_eq!(first.encoding(), 2);
        assert_eq!(f.powu(f.element(2).unwrap(), 12), f.one());
    }

    #[test]
    fn f9_is_gaussian_integers_mod_three() {
        let f = FiniteField::new(3, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 0, 1]);
        let i = f.element(3).unwrap();
        assert_eq!(f.mul(i, i), f.element(2).unwrap());
        assert_eq!(f.mul(i, i), f.neg(f.one()));
        // exhaustive check over the nine monic quadratics in lexicographic order
        let reducible: Vec<bool> = (0..9)
            .map(|t| {
                let c0 = t % 3;
                let c1 = t / 3;
                (0..3).any(|x| (x * x + c1 * x + c0) % 3 == 0)
            })
            .collect();
        assert_eq!(reducible.iter().position(|r| !r), Some(1));
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(matches!(FiniteField::new(4, 1), Err(Error::InvalidArgument(_))));
        assert!(matches!(FiniteField::new(5, 0), Err(Error::InvalidArgument(_))));
        assert!(matches!(FiniteField::new(2, 21), Err(Error::InvalidArgument(_))));
        assert!(FiniteField::with_order(12).is_err());
    }

    #[test]
    fn frobenius_examples() {
        let f = FiniteField::new(3, 2).unwrap();
        let i = f.element(3).unwrap();
        assert_eq!(f.frobenius(i, 1), f.neg(i));
        let f25 = FiniteField::new(5, 2).unwrap();
        for x in f25.elements() {
            assert_eq!(f25.frobenius(f25.frobenius(x, 1), 1), x);
            assert_eq!(f25.frobenius(x, 0), x);
        }
    }

    #[test]
    fn inverse_and_powers() {
        let f = FiniteField::new(7, 2).unwrap();
        assert_eq!(f.inv(f.zero()), Err(Error::DivisionByZero));
        for x in f.nonzero_elements() {
            let y = f.inv(x).unwrap();
            assert_eq!(f.mul(x, y), f.one());
            assert_eq!(f.pow(x, -3).unwrap(), f.powu(y, 3));
            assert_eq!(f.pow(x, 0).unwrap(), f.one());
        }
        assert!(f.pow(f.zero(), -1).is_err());
    }

    #[test]
    fn tables_agree_with_polynomial_multiplication() {
        for (p, e) in [(2, 3), (2, 4), (3, 3), (5, 2), (3, 4), (7, 2)] {
            let f = FiniteField::new(p, e).unwrap();
            for x in f.elements() {
                for y in f.elements() {
                    assert_eq!(f.mul(x, y), f.mul_by_polynomials(x, y), "F_{p}^{e}: {x}*{y}");
                }
            }
        }
    }

    #[test]
    fn omega_generates_multiplicative_group() {
        for q in [
            2u64, 3, 4, 8, 9, 16, 25, 27, 32, 49, 64, 81, 121, 125, 128, 243, 256, 343, 512, 625, 729, 1024, 2048,
            2187, 4096,
        ] {
            let f = FiniteField::with_order(q).unwrap();
            let w = f.primitive_root();
            assert_eq!(f.multiplicative_order(w).unwrap(), q - 1);
            let mut seen = vec![false; q as usize];
            let mut x = f.one();
            for _ in 0..q - 1 {
                assert!(!seen[x.index()]);
                seen[x.index()] = true;
                x = f.mul_by_polynomials(x, w);
            }
            assert_eq!(x, f.one());
        }
    }

    #[test]
    fn construction_is_deterministic() {
        let a = FiniteField::new(3, 4).unwrap();
        let b = FiniteField::new(3, 4).unwrap();
        assert_eq!(a.modulus(), b.modulus());
        assert_eq!(a.primitive_root(), b.primitive_root());
        assert_eq!(a.description(), b.description());
    }

    #[test]
    fn largest_supported_field() {
        let f = FiniteField::new(2, 20).unwrap();
        assert_eq!(f.order(), 1 << 20);
        let w = f.primitive_root();
        assert_eq!(f.powu(w, (1 << 20) - 1), f.one());
        assert_eq!(f.mul(w, f.inv(w).unwrap()), f.one());
    }

    #[test]
    fn description_format() {
        let f = FiniteField::new(3, 2).unwrap();
        assert_eq!(f.description(), "p=3\ne=2\nq=9\nmodulus=1 0 1\nomega=4\n");
    }
}
