use super::{CodeSpec, DefiningSet};
use crate::error::{Error, Result};
use crate::expsum;
use crate::gf2::{Element, Field};

/// The message `(u, v)` selecting codeword `c(u, v)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CodewordIndex {
    pub u: Element,
    pub v: Element,
}

impl CodewordIndex {
    pub fn new(u: Element, v: Element) -> Self {
        CodewordIndex { u, v }
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }
}

/// `wt(c(u, v))` from the sums `S(a, 0)` and `S(a, u)`:
///
/// * `b = 0`: `q(q + S(a,0))/4` if `v != 0`, else `q(q + S(a,0) - S(a,u))/4`;
/// * `b != 0`: `q(q - S(a,u))/4` if `v = b`, else `q^2/4`.
///
/// Sign-ambiguous sums are resolved exhaustively.
pub fn codeword_weight(spec: &CodeSpec<'_>, idx: CodewordIndex) -> Result<u64> {
    if idx.is_zero() {
        return Ok(0);
    }
    let q = spec.q() as i64;
    let s_u = || expsum::resolved_s(&spec.sum_params(idx.u));
    let four_w = if spec.b().is_zero() {
        let s0 = expsum::s_at_zero(spec.field(), spec.h(), spec.a())?;
        if idx.v.is_zero() {
            q * (q + s0 - s_u()?)
        } else {
            q * (q + s0)
        }
    } else if idx.v == spec.b() {
        q * (q - s_u()?)
    } else {
        q * q
    };
    if four_w < 0 || four_w % 4 != 0 {
        return Err(Error::Invariant(format!(
            "weight {four_w}/4 for {idx:?} in {spec} is not a nonnegative integer"
        )));
    }
    Ok((four_w / 4) as u64)
}

/// Number of positions `(x, y)` of `ds` with `Tr(u x + v y) = 1`.
pub fn direct_weight(field: &Field, ds: &DefiningSet, idx: CodewordIndex) -> u64 {
    ds.pairs()
        .iter()
        .filter(|&&(x, y)| field.abs_trace(field.mul(idx.u, x) + field.mul(idx.v, y)) == 1)
        .count() as u64
}
