//! Finite fields F_{q^d} as F_q[x]/(f) with f the lexicographically smallest
//! monic irreducible of degree d (coefficients compared low degree first).
//!
//! Elements are `u64` indices: the base-q digits are the coefficients,
//! lowest degree in the least significant digit.

use serde::{Deserialize, Serialize};

/// Polynomials over F_q as coefficient vectors, low degree first, no trailing zeros.
pub mod poly {
    pub fn trim(mut a: Vec<u64>) -> Vec<u64> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn degree(a: &[u64]) -> Option<usize> {
        a.iter().rposition(|&c| c != 0)
    }

    fn inv_mod(a: u64, q: u64) -> u64 {
        crate::primes::pow_mod(a, q - 2, q)
    }

    pub fn sub(a: &[u64], b: &[u64], q: u64) -> Vec<u64> {
        let n = a.len().max(b.len());
        trim((0..n).map(|i| (a.get(i).copied().unwrap_or(0) + q - b.get(i).copied().unwrap_or(0)) % q).collect())
    }

    pub fn mul(a: &[u64], b: &[u64], q: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % q;
            }
        }
        trim(out)
    }

    /// Remainder of `a` modulo `m` (m nonzero).
    pub fn rem(a: &[u64], m: &[u64], q: u64) -> Vec<u64> {
        let dm = degree(m).expect("nonzero modulus");
        let lead_inv = inv_mod(m[dm], q);
        let mut r = trim(a.to_vec());
        while let Some(dr) = degree(&r) {
            if dr < dm {
                break;
            }
            let c = r[dr] * lead_inv % q;
            let shift = dr - dm;
            for (i, &mi) in m.iter().enumerate().take(dm + 1) {
                r[shift + i] = (r[shift + i] + q - c * mi % q) % q;
            }
            r = trim(r);
        }
        r
    }

    pub fn gcd(a: &[u64], b: &[u64], q: u64) -> Vec<u64> {
        let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
        while !b.is_empty() {
            let r = rem(&a, &b, q);
            a = b;
            b = r;
        }
        a
    }

    pub fn mulmod(a: &[u64], b: &[u64], m: &[u64], q: u64) -> Vec<u64> {
        rem(&mul(a, b, q), m, q)
    }

    pub fn powmod(base: &[u64], mut e: u128, m: &[u64], q: u64) -> Vec<u64> {
        let mut acc = vec![1u64];
        let mut b = rem(base, m, q);
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(&acc, &b, m, q);
            }
            b = mulmod(&b, &b, m, q);
            e >>= 1;
        }
        rem(&acc, m, q)
    }

    /// Ben-Or style test: f of degree d is irreducible iff x^(q^d) = x mod f
    /// and gcd(x^(q^(d/r)) − x, f) = 1 for every prime r dividing d.
    pub fn is_irreducible(f: &[u64], q: u64) -> bool {
        let Some(d) = degree(f) else { return false };
        if d == 0 {
            return false;
        }
        if d == 1 {
            return true;
        }
        let x = vec![0, 1];
        // x^(q^k) by repeated q-th powers
        let frob = |k: usize| {
            let mut y = x.clone();
            for _ in 0..k {
                y = powmod(&y, q as u128, f, q);
            }
            y
        };
        if sub(&frob(d), &x, q) != Vec::<u64>::new() {
            return false;
        }
        for r in crate::primes::prime_divisors(d as u64) {
            let g = gcd(&sub(&frob(d / r as usize), &x, q), f, q);
            if degree(&g) != Some(0) {
                return false;
            }
        }
        true
    }
}

/// The lexicographically smallest monic irreducible of degree `d` over F_q,
/// comparing coefficient arrays from the constant term upward.
pub fn smallest_irreducible(q: u64, d: usize) -> Vec<u64> {
    let total = q.pow(d as u32);
    // the constant term is the leading digit of t; a zero constant term means x | f
    let start = if d > 1 { q.pow(d as u32 - 1) } else { 0 };
    for t in start..total {
        let mut f = vec![0u64; d + 1];
        let mut rest = t;
        for i in (0..d).rev() {
            f[i] = rest % q;
            rest /= q;
        }
        f[d] = 1;
        if poly::is_irreducible(&f, q) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteFieldSpec {
    pub q: u64,
    pub d: usize,
    /// Monic modulus, low degree first, length d+1.
    pub modulus: Vec<u64>,
}

/// Arithmetic in F_{q^d} on element indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteField {
    spec: FiniteFieldSpec,
    size: u64,
}

impl FiniteField {
    pub fn new(q: u64, d: usize) -> FiniteField {
        Self::from_spec(FiniteFieldSpec { q, d, modulus: smallest_irreducible(q, d) })
    }

    pub fn from_spec(spec: FiniteFieldSpec) -> FiniteField {
        let size = spec.q.pow(spec.d as u32);
        FiniteField { spec, size }
    }

    pub fn spec(&self) -> &FiniteFieldSpec {
        &self.spec
    }

    pub fn q(&self) -> u64 {
        self.spec.q
    }

    pub fn degree(&self) -> usize {
        self.spec.d
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn digits(&self, mut a: u64) -> Vec<u64> {
        let mut out = vec![0; self.spec.d];
        for c in out.iter_mut() {
            *c = a % self.spec.q;
            a /= self.spec.q;
        }
        out
    }

    pub fn from_digits(&self, digits: &[u64]) -> u64 {
        digits.iter().rev().fold(0, |acc, &c| acc * self.spec.q + c)
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let q = self.spec.q;
        if q == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        while a > 0 || b > 0 {
            out += ((a % q + b % q) % q) * place;
            a /= q;
            b /= q;
            place *= q;
        }
        out
    }

    pub fn neg(&self, a: u64) -> u64 {
        let q = self.spec.q;
        if q == 2 {
            return a;
        }
        let mut a = a;
        let mut out = 0;
        let mut place = 1;
        while a > 0 {
            out += ((q - a % q) % q) * place;
            a /= q;
            place *= q;
        }
        out
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if a == 0 || b == 0 {
            return 0;
        }
        if self.spec.d == 1 {
            return a * b % self.spec.q;
        }
        let r = poly::mulmod(&self.digits(a), &self.digits(b), &self.spec.modulus, self.spec.q);
        self.from_digits(&r)
    }

    pub fn pow(&self, a: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        let mut b = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: u64) -> u64 {
        assert!(a != 0, "zero has no multiplicative order");
        let n = self.size - 1;
        let mut ord = n;
        for r in crate::primes::prime_divisors(n) {
            while ord.is_multiple_of(r) && self.pow(a, ord / r) == 1 {
                ord /= r;
            }
        }
        ord
    }

    /// First element (in index order) of multiplicative order exactly `m`,
    /// found as x^((q^d−1)/m). Requires m | q^d − 1.
    pub fn element_of_order(&self, m: u64) -> Option<u64> {
        let n = self.size - 1;
        if m == 0 || !n.is_multiple_of(m) {
            return None;
        }
        // g^m = 1 already, so the order is m unless some g^(m/r) is trivial;
        // factoring m is cheap where factoring q^d − 1 may not be
        let rs = crate::primes::prime_divisors(m);
        (1..self.size).map(|x| self.pow(x, n / m)).find(|&g| rs.iter().all(|&r| self.pow(g, m / r) != 1))
    }

    /// Basis 1, x, …, x^{d−1} over the prime field, as indices.
    pub fn basis(&self) -> Vec<u64> {
        (0..self.spec.d).map(|i| self.spec.q.pow(i as u32)).collect()
    }
}
