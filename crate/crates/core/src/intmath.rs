//! Exact integer helpers shared by the field and sum code.

use num_integer::Integer;

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// Inverse of `a` modulo `m`, if `gcd(a, m) = 1`.
pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let ext = (a as i128).extended_gcd(&(m as i128));
    if ext.gcd != 1 {
        return None;
    }
    Some(ext.x.rem_euclid(m as i128) as u64)
}

/// Distinct prime divisors of `n`, ascending.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `gcd(2^alpha + 1, 2^e - 1)` evaluated through the parity of `e / gcd(e, alpha)`:
/// `1` when the quotient is odd, `2^d + 1` when it is even.
pub fn gcd_two_pow_plus_one(e: u32, alpha: u32) -> u64 {
    let d = gcd(e as u64, alpha as u64) as u32;
    if (e / d) % 2 == 1 {
        1
    } else {
        (1u64 << d) + 1
    }
}

/// `(-1)^k`.
pub fn neg_one_pow(k: u32) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_mod() {
        assert_eq!(mod_inverse(3, 7), Some(5));
        assert_eq!(mod_inverse(3, 63), None);
        assert_eq!(mod_inverse(5, 31), Some(25));
    }

    #[test]
    fn prime_divisors_small() {
        assert_eq!(prime_divisors(1), Vec::<u64>::new());
        assert_eq!(prime_divisors(12), vec![2, 3]);
        assert_eq!(prime_divisors(23), vec![23]);
    }

    #[test]
    fn gcd_identity_matches_direct_gcd() {
        for e in 1..=16u32 {
            for alpha in 1..=e {
                let direct = gcd((1u64 << alpha) + 1, (1u64 << e) - 1);
                assert_eq!(
                    gcd_two_pow_plus_one(e, alpha),
                    direct,
                    "e={e} alpha={alpha}"
                );
            }
        }
    }
}
