//! Arithmetic in GF(2^e) for `2 <= e <= 24`.
//!
//! Elements are packed polynomial-basis bit vectors; multiplication is
//! shift-and-XOR with reduction by the modulus. Subfields GF(2^t), `t | e`,
//! are not a separate type: their elements are the `x` with `x^(2^t) = x`.

mod field;
pub mod poly;
pub mod tables;

pub use field::{Element, Field};
