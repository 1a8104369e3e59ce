//! Integer helpers: gcd, trial-division primality, modular powers.
//!
//! Everything here works on `u64`; moduli stay far below `2^32` in practice,
//! and products are taken in `u128` so nothing overflows.

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Deterministic trial division. Fine for the degrees this crate handles;
/// cost grows with `sqrt(n)`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut f = 3;
    while f * f <= n {
        if n.is_multiple_of(f) {
            return false;
        }
        f += 2;
    }
    true
}

/// Distinct prime divisors, ascending.
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

/// `base^exp mod modulus` by square-and-multiply.
pub fn mod_pow(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let m = modulus as u128;
    let mut result: u128 = 1;
    let mut b = base as u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    result as u64
}

/// `gcd(2^e - 1, r)` without forming `2^e`.
pub fn gcd_mersenne(e: u64, r: u64) -> u64 {
    if r == 0 {
        // gcd(x, 0) = x; only reachable for tiny e in tests.
        return (1u64 << e.min(63)) - 1;
    }
    let residue = (mod_pow(2, e, r) + r - 1) % r;
    gcd(residue, r)
}

/// Inverse of `a` modulo the prime `p`, in `1..p`. `a` must not be divisible by `p`.
pub fn inverse_mod_prime(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    mod_pow(a % p, p - 2, p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        let small: Vec<u64> = (0..40).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
        assert!(is_prime(7919));
        assert!(!is_prime(7917));
    }

    #[test]
    fn divisors() {
        assert_eq!(prime_divisors(165), vec![3, 5, 11]);
        assert_eq!(prime_divisors(64), vec![2]);
        assert_eq!(prime_divisors(1), Vec::<u64>::new());
        assert_eq!(prime_divisors(97), vec![97]);
    }

    #[test]
    fn mersenne_gcd_matches_direct() {
        for e in 1..40u64 {
            for r in 1..60u64 {
                assert_eq!(gcd_mersenne(e, r), gcd((1u64 << e) - 1, r), "e={e} r={r}");
            }
        }
    }

    #[test]
    fn inverses() {
        for p in [3u64, 5, 7, 11, 13] {
            for a in 1..p {
                assert_eq!(a * inverse_mod_prime(a, p) % p, 1);
            }
        }
    }
}
