//! Polynomials over GF(2) packed into a `u64`, bit `i` holding the
//! coefficient of `x^i`. Only what modulus validation needs lives here.

/// Degree of `p`, `None` for the zero polynomial.
pub fn degree(p: u64) -> Option<u32> {
    if p == 0 {
        None
    } else {
        Some(63 - p.leading_zeros())
    }
}

/// Remainder of `a` modulo `m`. `m` must be nonzero.
pub fn rem(mut a: u64, m: u64) -> u64 {
    let dm = degree(m).expect("division by the zero polynomial");
    while let Some(da) = degree(a) {
        if da < dm {
            break;
        }
        a ^= m << (da - dm);
    }
    a
}

/// `a * b mod m` for operands already reduced modulo `m` with `deg m <= 32`.
pub fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    let dm = degree(m).expect("zero modulus");
    let mut acc = 0u64;
    let mut a = a;
    let mut b = b;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a;
        }
        b >>= 1;
        a <<= 1;
        if a >> dm & 1 == 1 {
            a ^= m;
        }
    }
    acc
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = rem(a, b);
        a = b;
        b = r;
    }
    a
}

/// `x^(2^k) mod m`, by `k` repeated squarings of `x`.
pub fn x_pow_2k(k: u32, m: u64) -> u64 {
    let mut t = rem(0b10, m);
    for _ in 0..k {
        t = mulmod(t, t, m);
    }
    t
}
