//! Primality, Fermat primes and small multiplicative-order helpers.

use serde::{Deserialize, Serialize};
use std::fmt;

/// Fermat primes known to exist; the default for every Fermat-sensitive check.
pub const DEFAULT_FERMAT: [u64; 5] = [3, 5, 17, 257, 65537];

/// A prime number. Construction goes through a deterministic Miller–Rabin test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct Prime(u64);

impl Prime {
    pub fn new(value: u64) -> Option<Prime> {
        is_prime(value).then_some(Prime(value))
    }

    pub const fn get(self) -> u64 {
        self.0
    }

    pub fn is_fermat_in(self, fermat: &[Prime]) -> bool {
        fermat.contains(&self)
    }
}

impl TryFrom<u64> for Prime {
    type Error = String;
    fn try_from(v: u64) -> Result<Self, Self::Error> {
        Prime::new(v).ok_or_else(|| format!("{v} is not prime"))
    }
}

impl From<Prime> for u64 {
    fn from(p: Prime) -> u64 {
        p.0
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Default Fermat primes as `Prime` values.
pub fn default_fermat() -> Vec<Prime> {
    DEFAULT_FERMAT.iter().map(|&v| Prime(v)).collect()
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin. The first twelve primes as witnesses are exact
/// for every 64-bit input.
pub fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &w in &WITNESSES {
        if n.is_multiple_of(w) {
            return n == w;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Distinct prime divisors of `n` in ascending order (trial division).
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut f = 2;
    while f * f <= n {
        if n.is_multiple_of(f) {
            out.push(f);
            while n.is_multiple_of(f) {
                n /= f;
            }
        }
        f += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Multiplicative order of `a` modulo the prime `p` (requires p ∤ a).
pub fn mult_order(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    let mut ord = p - 1;
    for f in prime_divisors(p - 1) {
        while ord.is_multiple_of(f) && pow_mod(a, ord / f, p) == 1 {
            ord /= f;
        }
    }
    ord
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn trial(n: u64) -> bool {
        n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
    }

    #[test]
    fn small_values_match_trial_division() {
        for n in 0..5000 {
            assert_eq!(is_prime(n), trial(n), "n = {n}");
        }
    }

    #[test]
    fn large_known_values() {
        assert!(is_prime(65537));
        assert!(is_prime((1u64 << 61) - 1));
        assert!(!is_prime(3215031751)); // strong pseudoprime to bases 2,3,5,7
        assert!(!is_prime(3825123056546413051));
        assert!(is_prime(18446744073709551557));
    }

    #[test]
    fn orders() {
        assert_eq!(mult_order(7, 5), 4);
        assert_eq!(mult_order(2, 13), 12);
        assert_eq!(mult_order(3, 13), 3);
        assert_eq!(mult_order(4, 3), 1);
    }

    proptest! {
        #[test]
        fn order_is_minimal(p_idx in 0usize..10, a in 1u64..200) {
            let p = [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31][p_idx];
            prop_assume!(a % p != 0);
            let o = mult_order(a, p);
            prop_assert_eq!(pow_mod(a, o, p), 1);
            for k in 1..o {
                prop_assert_ne!(pow_mod(a, k, p), 1);
            }
        }

        #[test]
        fn prime_matches_trial_in_range(n in 0u64..2_000_000) {
            prop_assert_eq!(is_prime(n), trial(n));
        }
    }
}
