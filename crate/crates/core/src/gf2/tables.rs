//! Shipped irreducible moduli, one per degree. Bit `i` is the coefficient of `x^i`.

/// Default modulus for each degree `e` in `2..=24` (index `e - 2`). Every
/// entry is primitive, so the pinned generator comes out as `x`.
pub const DEFAULT_MODULI: [u64; 23] = [
    0x7,       // x^2 + x + 1
    0xb,       // x^3 + x + 1
    0x13,      // x^4 + x + 1
    0x25,      // x^5 + x^2 + 1
    0x5b,      // x^6 + x^4 + x^3 + x + 1
    0x83,      // x^7 + x + 1
    0x11d,     // x^8 + x^4 + x^3 + x^2 + 1
    0x211,     // x^9 + x^4 + 1
    0x46f,     // x^10 + x^6 + x^5 + x^3 + x^2 + x + 1
    0x805,     // x^11 + x^2 + 1
    0x10eb,    // x^12 + x^7 + x^6 + x^5 + x^3 + x + 1
    0x201b,    // x^13 + x^4 + x^3 + x + 1
    0x40a9,    // x^14 + x^7 + x^5 + x^3 + 1
    0x8035,    // x^15 + x^5 + x^4 + x^2 + 1
    0x1002d,   // x^16 + x^5 + x^3 + x^2 + 1
    0x20009,   // x^17 + x^3 + 1
    0x41403,   // x^18 + x^12 + x^10 + x + 1
    0x80027,   // x^19 + x^5 + x^2 + x + 1
    0x1006f3,  // x^20 + x^10 + x^9 + x^7 + x^6 + x^5 + x^4 + x + 1
    0x200005,  // x^21 + x^2 + 1
    0x400003,  // x^22 + x + 1
    0x800021,  // x^23 + x^5 + 1
    0x1000087, // x^24 + x^7 + x^2 + x + 1
];

/// Second modulus for `e` in `3..=8` (index `e - 3`), used to check that
/// code-level results do not depend on the modulus or generator. Degrees
/// 4, 6 and 8 deliberately use non-primitive polynomials, so `x` is not a
/// generator there.
pub const ALTERNATE_MODULI: [u64; 6] = [
    0xd,   // x^3 + x^2 + 1
    0x1f,  // x^4 + x^3 + x^2 + x + 1
    0x3d,  // x^5 + x^4 + x^3 + x^2 + 1
    0x49,  // x^6 + x^3 + 1
    0x89,  // x^7 + x^3 + 1
    0x11b, // x^8 + x^4 + x^3 + x + 1
];

pub fn default_modulus(e: u32) -> Option<u64> {
    e.checked_sub(2)
        .and_then(|i| DEFAULT_MODULI.get(i as usize))
        .copied()
}

pub fn alternate_modulus(e: u32) -> Option<u64> {
    e.checked_sub(3)
        .and_then(|i| ALTERNATE_MODULI.get(i as usize))
        .copied()
}
