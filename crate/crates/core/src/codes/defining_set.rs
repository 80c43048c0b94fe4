use super::CodeSpec;
use crate::error::{Error, Result};
use crate::expsum;
use crate::gf2::Element;

/// Largest `e` for which [`build_defining_set`] enumerates `GF(q)^2`.
pub const MAX_DEFINING_SET_DEGREE: u32 = 13;

/// The coordinate positions of a code: pairs `(x, y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefiningSet {
    pairs: Vec<(Element, Element)>,
}

impl DefiningSet {
    /// Wraps an arbitrary list of pairs, e.g. to exercise the checks on sets
    /// that were not produced by [`build_defining_set`].
    pub fn from_pairs(pairs: Vec<(Element, Element)>) -> Self {
        DefiningSet { pairs }
    }

    pub fn pairs(&self) -> &[(Element, Element)] {
        &self.pairs
    }

    /// The code length `n = |D|`.
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// Enumerates `(x, y)` with `x` outer and `y` inner, keeping the nonzero pairs
/// with `Tr(a x^(2^h+1) + b y) = 0`.
pub fn build_defining_set(spec: &CodeSpec<'_>) -> Result<DefiningSet> {
    let f = spec.field();
    let e = f.degree();
    if e > MAX_DEFINING_SET_DEGREE {
        return Err(Error::CostRefused {
            operation: "defining-set enumeration",
            e,
            limit: MAX_DEFINING_SET_DEGREE,
            estimate: (f.size() as f64).powi(2),
        });
    }
    let mut pairs = Vec::new();
    for x in f.elements() {
        let quad = f.mul(spec.a(), f.mul(f.frobenius(x, spec.h()), x));
        for y in f.elements() {
            if (x, y) == (Element::ZERO, Element::ZERO) {
                continue;
            }
            if f.abs_trace(quad + f.mul(spec.b(), y)) == 0 {
                pairs.push((x, y));
            }
        }
    }
    Ok(DefiningSet { pairs })
}

/// `n = q^2/2 + q S(a, 0)/2 - 1` for `b = 0`, and `q^2/2 - 1` otherwise.
pub fn length_formula(spec: &CodeSpec<'_>) -> Result<u64> {
    let q = spec.q() as i64;
    let n = if spec.b().is_zero() {
        let s0 = expsum::s_at_zero(spec.field(), spec.h(), spec.a())?;
        q * q / 2 + q * s0 / 2 - 1
    } else {
        q * q / 2 - 1
    };
    u64::try_from(n).map_err(|_| Error::Invariant(format!("negative length {n} for {spec}")))
}

/// No coordinate of the code is identically zero, i.e. `(0, 0)` is not a
/// position. This is what makes the dual distance at least 2.
pub fn dual_distance_at_least_2(ds: &DefiningSet) -> bool {
    !ds.pairs.contains(&(Element::ZERO, Element::ZERO))
}
