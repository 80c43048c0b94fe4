//! Binary Weil sums `S_alpha(a, b) = sum_x (-1)^Tr(a x^(2^alpha+1) + b x)` over
//! GF(2^e), and the three-weight binary codes whose coordinates are the
//! defining set `{(x, y) != 0 : Tr(a x^(2^h+1) + b y) = 0}`.
//!
//! Every closed-form result in this crate has an exhaustive counterpart that
//! shares no code with it, so the two can be swept against each other.

pub mod codes;
pub mod error;
pub mod expsum;
pub mod gf2;
pub mod intmath;
pub mod report;

pub use error::{Error, Result};
pub use gf2::{Element, Field};
