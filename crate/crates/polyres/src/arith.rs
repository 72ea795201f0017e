//! Modular arithmetic on machine words, primality testing, and q-adic valuations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use std::fmt;

/// `a * b mod m` without overflow for any `u64` modulus.
#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// `base^exp mod m` by square-and-multiply.
pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    debug_assert!(m >= 2);
    let mut base = base % m;
    let mut acc = 1u64 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Multiplicative inverse of `a` modulo the prime `q`.
#[inline]
pub fn inv_mod(a: u64, q: u64) -> u64 {
    debug_assert!(a % q != 0);
    pow_mod(a, q - 2, q)
}

/// Deterministic Miller-Rabin primality test, exact for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// All primes up to and including `n`, by sieve.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for p in 2..=n {
        if !composite[p] {
            out.push(p as u64);
            let mut k = p * p;
            while k <= n {
                composite[k] = true;
                k += p;
            }
        }
    }
    out
}

/// Residue of an arbitrary-precision integer in `[0, m)`.
pub fn residue(a: &BigInt, m: u64) -> u64 {
    let r = a.mod_floor(&BigInt::from(m));
    r.to_u64().expect("mod_floor result fits the modulus")
}

/// The q-adic valuation of an integer: the exponent of the largest power of q
/// dividing it. The valuation of zero is infinite, so a zero value vacuously
/// satisfies every divisibility bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Valuation {
    Finite(u32),
    Infinite,
}

impl Valuation {
    pub fn at_least(self, e: u32) -> bool {
        match self {
            Valuation::Finite(v) => v >= e,
            Valuation::Infinite => true,
        }
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

/// Largest `e` with `q^e | n`; `Infinite` for `n = 0`.
pub fn valuation(n: &BigInt, q: u64) -> Valuation {
    debug_assert!(is_prime(q));
    if n.is_zero() {
        return Valuation::Infinite;
    }
    let q = BigInt::from(q);
    let mut n = n.abs();
    let mut e = 0u32;
    loop {
        let (quo, rem) = n.div_rem(&q);
        if !rem.is_zero() {
            return Valuation::Finite(e);
        }
        n = quo;
        e += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pow_mod_small() {
        assert_eq!(pow_mod(5, 6, 13), 12);
        assert_eq!(pow_mod(2, 10, 1000), 24);
        assert_eq!(pow_mod(7, 0, 11), 1);
    }

    #[test]
    fn inverse_round_trip() {
        for q in [3u64, 5, 7, 13, 101] {
            for a in 1..q {
                assert_eq!(mul_mod(a, inv_mod(a, q), q), 1);
            }
        }
    }

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(13));
        assert!(is_prime(104729));
        assert!(!is_prime(1));
        assert!(!is_prime(0));
        assert!(!is_prime(91)); // 7 * 13
        assert!(!is_prime(561)); // Carmichael
        let sieved = primes_up_to(2000);
        for n in 0..=2000u64 {
            assert_eq!(is_prime(n), sieved.contains(&n), "n = {n}");
        }
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(valuation(&BigInt::from(175760), 13), Valuation::Finite(3));
        assert_eq!(valuation(&BigInt::from(1), 7), Valuation::Finite(0));
        assert_eq!(valuation(&BigInt::from(0), 7), Valuation::Infinite);
        assert_eq!(valuation(&BigInt::from(-121), 11), Valuation::Finite(2));
    }

    #[test]
    fn valuation_ordering() {
        assert!(Valuation::Infinite > Valuation::Finite(u32::MAX));
        assert!(Valuation::Finite(3).at_least(3));
        assert!(!Valuation::Finite(2).at_least(3));
        assert!(Valuation::Infinite.at_least(1000));
    }

    #[test]
    fn residue_of_negative() {
        assert_eq!(residue(&BigInt::from(-6), 13), 7);
        assert_eq!(residue(&BigInt::from(-1), 5), 4);
        assert_eq!(residue(&BigInt::from(27), 13), 1);
    }
}
