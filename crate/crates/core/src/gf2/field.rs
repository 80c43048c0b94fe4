use std::fmt;
use std::ops::{Add, AddAssign};

use serde::{Serialize, Serializer};

use super::{poly, tables};
use crate::error::{Error, Result};
use crate::intmath;

/// An element of GF(2^e) in the polynomial basis: bit `i` is the
/// coefficient of `x^i`. Addition is XOR and needs no field context.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element(u32);

impl Element {
    pub const ZERO: Element = Element(0);
    pub const ONE: Element = Element(1);

    pub const fn bits(self) -> u32 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Unchecked constructor; use [`Field::element`] to validate against a field.
    pub(crate) const fn from_bits(bits: u32) -> Self {
        Element(bits)
    }
}

// characteristic 2: addition is XOR of the coefficient bits
impl Add for Element {
    type Output = Element;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Element) -> Element {
        Element(self.0 ^ rhs.0)
    }
}

impl AddAssign for Element {
    #[allow(clippy::suspicious_op_assign_impl)]
    fn add_assign(&mut self, rhs: Element) {
        self.0 ^= rhs.0;
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#x}", self.0)
    }
}

impl fmt::LowerHex for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::LowerHex::fmt(&self.0, f)
    }
}

impl Serialize for Element {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// The field GF(2^e) for a validated irreducible modulus, together with a
/// deterministically pinned primitive element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Field {
    e: u32,
    modulus: u64,
    generator: Element,
    // bit i is Tr(x^i); the absolute trace is then a parity of a masked word
    trace_mask: u32,
}

impl Field {
    pub const MIN_DEGREE: u32 = 2;
    pub const MAX_DEGREE: u32 = 24;
    /// Largest degree for which [`Field::dlog`] will enumerate.
    pub const MAX_DLOG_DEGREE: u32 = 16;

    /// GF(2^e) under the shipped default modulus.
    pub fn new(e: u32) -> Result<Self> {
        Self::check_degree(e)?;
        let modulus = tables::default_modulus(e).expect("default table covers every supported e");
        Self::with_modulus(e, modulus)
    }

    /// GF(2^e) under the shipped alternate modulus (available for `3 <= e <= 8`).
    pub fn alternate(e: u32) -> Result<Self> {
        Self::check_degree(e)?;
        let modulus = tables::alternate_modulus(e).ok_or_else(|| {
            Error::InvalidParameter(format!("no alternate modulus shipped for e = {e}"))
        })?;
        Self::with_modulus(e, modulus)
    }

    /// GF(2^e) under `modulus`, or the default when `None`.
    pub fn from_parts(e: u32, modulus: Option<u64>) -> Result<Self> {
        match modulus {
            Some(m) => Self::with_modulus(e, m),
            None => Self::new(e),
        }
    }

    pub fn with_modulus(e: u32, modulus: u64) -> Result<Self> {
        Self::check_degree(e)?;
        if poly::degree(modulus) != Some(e) {
            return Err(Error::ModulusDegree { e, modulus });
        }
        check_irreducible(e, modulus)?;

        let mut field = Field {
            e,
            modulus,
            generator: Element::ONE,
            trace_mask: 0,
        };
        field.trace_mask = (0..e)
            .map(|i| {
                let basis = Element(1 << i);
                (field.trace_slow(basis, 1).0 & 1) << i
            })
            .fold(0, |acc, bit| acc | bit);
        field.generator = field.find_generator();
        Ok(field)
    }

    fn check_degree(e: u32) -> Result<()> {
        if (Self::MIN_DEGREE..=Self::MAX_DEGREE).contains(&e) {
            Ok(())
        } else {
            Err(Error::DegreeOutOfRange {
                e,
                min: Self::MIN_DEGREE,
                max: Self::MAX_DEGREE,
            })
        }
    }

    fn find_generator(&self) -> Element {
        let group = self.group_order();
        let primes = intmath::prime_divisors(group);
        (1..self.size() as u32)
            .map(Element)
            .find(|&x| {
                primes
                    .iter()
                    .all(|&p| self.pow_u(x, group / p) != Element::ONE)
            })
            .expect("the multiplicative group of a finite field is cyclic")
    }

    /// The exponent `e`.
    pub fn degree(&self) -> u32 {
        self.e
    }

    /// `q = 2^e`.
    pub fn size(&self) -> u64 {
        1 << self.e
    }

    /// `q - 1`.
    pub fn group_order(&self) -> u64 {
        self.size() - 1
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn generator(&self) -> Element {
        self.generator
    }

    pub fn contains(&self, x: Element) -> bool {
        (x.0 as u64) < self.size()
    }

    pub fn element(&self, bits: u64) -> Result<Element> {
        if bits < self.size() {
            Ok(Element(bits as u32))
        } else {
            Err(Error::NotInField { bits, e: self.e })
        }
    }

    /// All `q` elements in increasing bit order.
    pub fn elements(&self) -> impl Iterator<Item = Element> + Clone {
        (0..self.size() as u32).map(Element)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Element> + Clone {
        (1..self.size() as u32).map(Element)
    }

    pub fn mul(&self, x: Element, y: Element) -> Element {
        let top = 1u32 << self.e;
        let m = self.modulus as u32;
        let mut a = x.0;
        let mut b = y.0;
        let mut acc = 0u32;
        while b != 0 {
            if b & 1 == 1 {
                acc ^= a;
            }
            b >>= 1;
            a <<= 1;
            if a & top != 0 {
                a ^= m;
            }
        }
        Element(acc)
    }

    pub fn square(&self, x: Element) -> Element {
        self.mul(x, x)
    }

    /// `x^(2^k)`; `k` is taken modulo `e`.
    pub fn frobenius(&self, x: Element, k: u32) -> Element {
        (0..k % self.e).fold(x, |t, _| self.square(t))
    }

    /// `x^k` for a nonnegative exponent, reduced modulo `q - 1` when `x != 0`.
    pub fn pow_u(&self, x: Element, k: u64) -> Element {
        if k == 0 {
            return Element::ONE;
        }
        if x.is_zero() {
            return Element::ZERO;
        }
        let mut k = k % self.group_order();
        let mut base = x;
        let mut acc = Element::ONE;
        while k != 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.square(base);
            k >>= 1;
        }
        acc
    }

    /// `x^k` for any integer exponent; `0` to a negative power is an error.
    pub fn pow(&self, x: Element, k: i64) -> Result<Element> {
        if k >= 0 {
            return Ok(self.pow_u(x, k as u64));
        }
        if x.is_zero() {
            return Err(Error::DivisionByZero { e: self.e });
        }
        let k = k.unsigned_abs() % self.group_order();
        Ok(self.pow_u(x, self.group_order() - k))
    }

    /// Multiplicative inverse as `x^(q-2)`.
    pub fn inv(&self, x: Element) -> Result<Element> {
        if x.is_zero() {
            return Err(Error::DivisionByZero { e: self.e });
        }
        Ok(self.pow_u(x, self.size() - 2))
    }

    /// `g^k` for the pinned generator.
    pub fn gen_pow(&self, k: i64) -> Element {
        self.pow(self.generator, k).expect("generator is nonzero")
    }

    fn trace_slow(&self, x: Element, t: u32) -> Element {
        let mut acc = Element::ZERO;
        let mut term = x;
        for _ in 0..self.e / t {
            acc += term;
            term = self.frobenius(term, t);
        }
        acc
    }

    /// `Tr_t(x) = x + x^(2^t) + ... + x^(2^(t(e/t - 1)))`, an element of the
    /// subfield GF(2^t) (represented inside GF(2^e)).
    pub fn trace_t(&self, x: Element, t: u32) -> Result<Element> {
        if t == 0 || !self.e.is_multiple_of(t) {
            return Err(Error::NotADivisor { e: self.e, t });
        }
        Ok(self.trace_slow(x, t))
    }

    /// Absolute trace `Tr_1(x)` as a bit.
    pub fn abs_trace(&self, x: Element) -> u8 {
        ((x.0 & self.trace_mask).count_ones() & 1) as u8
    }

    /// Canonical additive character `(-1)^Tr(x)`.
    pub fn chi(&self, x: Element) -> i64 {
        1 - 2 * self.abs_trace(x) as i64
    }

    /// Bit `i` of the returned word is `Tr(x^i)`, so that
    /// `Tr(z) = parity(z & mask)`.
    pub fn trace_mask(&self) -> u32 {
        self.trace_mask
    }

    /// Whether `x` lies in the subfield GF(2^t), i.e. `x^(2^t) = x`.
    pub fn in_subfield(&self, x: Element, t: u32) -> bool {
        self.frobenius(x, t) == x
    }

    /// Whether `a` is an `s`-th power in the multiplicative group, decided by
    /// `a^((q-1)/gcd(s, q-1)) = 1`.
    pub fn is_power_residue(&self, a: Element, s: u64) -> Result<bool> {
        if a.is_zero() {
            return Err(Error::ZeroArgument {
                what: "power-residue argument",
            });
        }
        if s == 0 {
            return Err(Error::InvalidParameter(
                "residue order must be positive".into(),
            ));
        }
        let n = self.group_order();
        Ok(self.pow_u(a, n / intmath::gcd(s, n)) == Element::ONE)
    }

    pub fn multiplicative_order(&self, x: Element) -> Result<u64> {
        if x.is_zero() {
            return Err(Error::ZeroArgument {
                what: "order argument",
            });
        }
        let mut order = self.group_order();
        for p in intmath::prime_divisors(order) {
            while order.is_multiple_of(p) && self.pow_u(x, order / p) == Element::ONE {
                order /= p;
            }
        }
        Ok(order)
    }

    /// Discrete logarithm base the pinned generator, by enumeration.
    pub fn dlog(&self, x: Element) -> Result<u64> {
        if self.e > Self::MAX_DLOG_DEGREE {
            return Err(Error::CostRefused {
                operation: "discrete log",
                e: self.e,
                limit: Self::MAX_DLOG_DEGREE,
                estimate: self.group_order() as f64,
            });
        }
        if x.is_zero() {
            return Err(Error::ZeroArgument {
                what: "discrete-log argument",
            });
        }
        let mut t = Element::ONE;
        for k in 0..self.group_order() {
            if t == x {
                return Ok(k);
            }
            t = self.mul(t, self.generator);
        }
        unreachable!("generator has full order")
    }

    /// Power-of-generator rendering such as `g^17`, or `0`.
    pub fn display_power(&self, x: Element) -> Result<String> {
        if x.is_zero() {
            return Ok("0".into());
        }
        Ok(format!("g^{}", self.dlog(x)?))
    }

    /// Parses `g^k` (negative `k` allowed) against the pinned generator, or a
    /// hexadecimal bit pattern with optional `0x` prefix.
    pub fn parse_element(&self, input: &str) -> Result<Element> {
        let s = input.trim();
        let err = |reason: &str| Error::Parse {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        if let Some(k) = s.strip_prefix("g^") {
            let k: i64 = k
                .trim()
                .parse()
                .map_err(|_| err("exponent is not an integer"))?;
            return Ok(self.gen_pow(k));
        }
        if s == "g" {
            return Ok(self.generator);
        }
        let digits = s
            .strip_prefix("0x")
            .or_else(|| s.strip_prefix("0X"))
            .unwrap_or(s);
        if digits.is_empty() {
            return Err(err("empty value"));
        }
        let bits = u64::from_str_radix(digits, 16).map_err(|_| err("not hexadecimal"))?;
        self.element(bits)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GF(2^{}) mod {:#x}, g = {}",
            self.e, self.modulus, self.generator
        )
    }
}

/// Rabin's test: `x^(2^e) = x mod P` and `gcd(x^(2^(e/p)) - x, P) = 1` for every
/// prime `p | e`. On failure the error names the failing exponent test and, when
/// one is exposed by the gcd, a nontrivial factor.
fn check_irreducible(e: u32, modulus: u64) -> Result<()> {
    let x = 0b10u64;
    let t = poly::x_pow_2k(e, modulus);
    if t != x {
        let g = poly::gcd(modulus, t ^ x);
        return Err(Error::ReducibleModulus {
            modulus,
            test: format!("x^(2^{e}) = x"),
            factor: (poly::degree(g).unwrap_or(0) > 0).then_some(g),
        });
    }
    for p in intmath::prime_divisors(e as u64) {
        let k = e / p as u32;
        let g = poly::gcd(modulus, poly::x_pow_2k(k, modulus) ^ x);
        if g != 1 {
            return Err(Error::ReducibleModulus {
                modulus,
                test: format!("gcd(x^(2^{k}) - x, P) = 1"),
                factor: Some(g),
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf4_basics() {
        let f = Field::new(2).unwrap();
        assert_eq!(f.size(), 4);
        assert_eq!(f.modulus(), 0b111);
        let x = Element(0b10);
        assert_eq!(f.mul(x, x), Element(0b11));
        assert_eq!(f.inv(x).unwrap(), Element(0b11));
    }

    #[test]
    fn gf32_generator_has_full_order() {
        let f = Field::new(5).unwrap();
        assert_eq!(f.multiplicative_order(f.generator()).unwrap(), 31);
    }

    #[test]
    fn reducible_x6_rejected_with_factor() {
        let err = Field::with_modulus(6, 1 << 6).unwrap_err();
        match err {
            Error::ReducibleModulus { factor, .. } => assert_eq!(factor, Some(0b10)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn reducible_with_all_factor_degrees_dividing_e_rejected() {
        // (x+1)(x^2+x+1)(x^3+x+1) has degree 6 and is squarefree with factor
        // degrees dividing 6, so it survives x^(2^6) = x and only fails the gcd tests.
        let p = {
            let a = 0b11u64;
            let b = 0b111u64;
            let c = 0b1011u64;
            let clmul = |x: u64, y: u64| {
                (0..64)
                    .filter(|i| y >> i & 1 == 1)
                    .fold(0u64, |acc, i| acc ^ (x << i))
            };
            clmul(clmul(a, b), c)
        };
        assert_eq!(poly::degree(p), Some(6));
        assert_eq!(poly::x_pow_2k(6, p), 0b10);
        assert!(matches!(
            Field::with_modulus(6, p),
            Err(Error::ReducibleModulus {
                factor: Some(_),
                ..
            })
        ));
    }

    #[test]
    fn degree_bounds() {
        assert!(matches!(Field::new(1), Err(Error::DegreeOutOfRange { .. })));
        assert!(matches!(
            Field::new(25),
            Err(Error::DegreeOutOfRange { .. })
        ));
        assert!(matches!(
            Field::with_modulus(5, 0b1011),
            Err(Error::ModulusDegree { .. })
        ));
    }

    #[test]
    fn every_shipped_modulus_is_valid() {
        for e in Field::MIN_DEGREE..=Field::MAX_DEGREE {
            let f = Field::new(e).unwrap_or_else(|err| panic!("default e={e}: {err}"));
            // the default table is primitive
            assert_eq!(f.generator(), Element(2), "e={e}");
        }
        for e in 3..=8 {
            let f = Field::alternate(e).unwrap();
            assert_ne!(f.modulus(), Field::new(e).unwrap().modulus());
        }
        assert_ne!(Field::alternate(4).unwrap().generator(), Element(2));
        assert_ne!(Field::alternate(6).unwrap().generator(), Element(2));
    }

    #[test]
    fn inverse_and_powers() {
        let f = Field::new(6).unwrap();
        let g = f.generator();
        assert_eq!(f.inv(Element::ONE).unwrap(), Element::ONE);
        assert_eq!(f.mul(f.inv(g).unwrap(), g), Element::ONE);
        assert_eq!(f.pow(g, 0).unwrap(), Element::ONE);
        assert_eq!(f.pow(g, 63).unwrap(), Element::ONE);
        assert_eq!(f.pow(g, -1).unwrap(), f.inv(g).unwrap());
        assert!(f.inv(Element::ZERO).is_err());
        assert!(f.pow(Element::ZERO, -2).is_err());
        assert_eq!(f.pow(Element::ZERO, 0).unwrap(), Element::ONE);
    }

    #[test]
    fn trace_of_identity_degree() {
        let f = Field::new(6).unwrap();
        for x in f.elements() {
            assert_eq!(f.trace_t(x, 6).unwrap(), x);
        }
        assert_eq!(f.trace_t(Element::ZERO, 2).unwrap(), Element::ZERO);
        assert!(matches!(
            f.trace_t(Element::ONE, 4),
            Err(Error::NotADivisor { .. })
        ));
        let kernel = f.elements().filter(|&x| f.abs_trace(x) == 0).count();
        assert_eq!(kernel, 32);
    }

    #[test]
    fn cube_residues_in_gf64() {
        let f = Field::new(6).unwrap();
        let g = f.generator();
        let cubes: std::collections::BTreeSet<_> =
            f.nonzero_elements().map(|x| f.pow_u(x, 3)).collect();
        assert!(!cubes.contains(&g));
        assert!(!f.is_power_residue(g, 3).unwrap());
        assert!(f.is_power_residue(f.gen_pow(3), 3).unwrap());
        assert!(f.is_power_residue(Element::ONE, 7).unwrap());
        assert!(f.is_power_residue(Element::ZERO, 3).is_err());
    }

    #[test]
    fn parse_syntax() {
        let f = Field::new(6).unwrap();
        assert_eq!(f.parse_element("g^3").unwrap(), f.gen_pow(3));
        assert_eq!(f.parse_element("g").unwrap(), f.generator());
        assert_eq!(f.parse_element("0x1b").unwrap(), Element(0x1b));
        assert_eq!(f.parse_element("3f").unwrap(), Element(0x3f));
        assert!(f.parse_element("0x40").is_err());
        assert!(f.parse_element("g^x").is_err());
        assert_eq!(f.display_power(f.gen_pow(40)).unwrap(), "g^40");
    }

    #[test]
    fn dlog_refused_for_large_fields() {
        let f = Field::new(17).unwrap();
        assert!(matches!(
            f.dlog(Element::ONE),
            Err(Error::CostRefused { .. })
        ));
    }
}
