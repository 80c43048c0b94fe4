//! The sums `S_alpha(a, b) = sum_{x in GF(2^e)} chi(a x^(2^alpha + 1) + b x)`.
//!
//! [`brute_force_s`] adds up all `q` character values. [`closed_form_s`]
//! evaluates the same number by case analysis on the parity of `e / d`,
//! `d = gcd(e, alpha)`:
//!
//! | `e/d` | `b`  | `a`         | value                                          |
//! |-------|------|-------------|------------------------------------------------|
//! | odd   | 0    | any         | `0`                                            |
//! | odd   | != 0 | any         | `0` or `±2^((e+d)/2)` (sign left open)         |
//! | even  | 0    | non-residue | `(-1)^(m/d) 2^m`                               |
//! | even  | 0    | residue     | `-(-1)^(m/d) 2^(m+d)`                          |
//! | even  | != 0 | non-residue | `(-1)^(m/d) 2^m chi(a x0^(2^alpha+1))`         |
//! | even  | != 0 | residue     | `0`, or `-(-1)^(m/d) 2^(m+d) chi(a x0^(2^alpha+1))` |
//!
//! Here `m = e/2`, "residue" means a `(2^d + 1)`-th power in GF(2^e)^*, and
//! `x0` is any solution of `a^(2^alpha) x^(2^(2 alpha)) + a x = b^(2^alpha)`.
//!
//! The last row replaces an older evaluation that split on `Tr_d(a)` and
//! gave `(-1)^(m/d) 2^m chi(a x0^(2^alpha+1))` when `Tr_d(a) != 0`; that
//! version is kept as [`legacy_incorrect_s`] so it can be shown wrong.
//! The older statement also printed `(-1)^(m/h)` for the non-residue row;
//! with `d = gcd(e, alpha)` the exponent used here is `m/d` throughout.

mod linearized;

use std::fmt;

use serde::Serialize;

pub use linearized::{linearized_map, solve_linearized, LinearizedSolution};

use crate::error::{Error, Result};
use crate::gf2::{Element, Field};
use crate::intmath::{self, neg_one_pow};

/// Largest `e` accepted by [`brute_force_s`].
pub const MAX_BRUTE_FORCE_DEGREE: u32 = 20;

/// Inputs of one sum `S_alpha(a, b)` over a fixed field.
#[derive(Clone, Copy, Debug)]
pub struct SumParams<'f> {
    field: &'f Field,
    alpha: u32,
    a: Element,
    b: Element,
}

impl<'f> SumParams<'f> {
    pub fn new(field: &'f Field, alpha: u32, a: Element, b: Element) -> Result<Self> {
        if alpha == 0 {
            return Err(Error::InvalidParameter("alpha must be positive".into()));
        }
        if a.is_zero() {
            return Err(Error::ZeroArgument { what: "a" });
        }
        for (name, x) in [("a", a), ("b", b)] {
            if !field.contains(x) {
                return Err(Error::InvalidParameter(format!(
                    "{name} = {x} is outside GF(2^{})",
                    field.degree()
                )));
            }
        }
        Ok(SumParams { field, alpha, a, b })
    }

    pub fn field(&self) -> &'f Field {
        self.field
    }

    pub fn alpha(&self) -> u32 {
        self.alpha
    }

    pub fn a(&self) -> Element {
        self.a
    }

    pub fn b(&self) -> Element {
        self.b
    }

    /// `d = gcd(e, alpha)`.
    pub fn d(&self) -> u32 {
        intmath::gcd(self.field.degree() as u64, self.alpha as u64) as u32
    }

    /// Whether `e / d` is even.
    pub fn quotient_even(&self) -> bool {
        (self.field.degree() / self.d()).is_multiple_of(2)
    }

    /// `m = e / 2` when `e / d` is even.
    pub fn m(&self) -> Option<u32> {
        self.quotient_even().then(|| self.field.degree() / 2)
    }

    /// Whether `a` is a `(2^d + 1)`-th power.
    pub fn a_is_residue(&self) -> bool {
        self.field
            .is_power_residue(self.a, (1u64 << self.d()) + 1)
            .expect("a is nonzero")
    }

    /// `a x^(2^alpha + 1)`.
    fn quadratic_term(&self, x: Element) -> Element {
        let f = self.field;
        f.mul(self.a, f.mul(f.frobenius(x, self.alpha), x))
    }

    /// The same sum with a different linear coefficient.
    pub fn at(&self, b: Element) -> Self {
        SumParams { b, ..*self }
    }
}

/// Which case of the evaluation produced a value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseTag {
    /// `e/d` odd, `b = 0`.
    L1,
    /// `e/d` odd, `b != 0`, `Tr_d(b c^-1) != 1`.
    L2Zero,
    /// `e/d` odd, `b != 0`, `Tr_d(b c^-1) = 1`.
    L2Ambiguous,
    L3NonResidue,
    L3Residue,
    /// `e/d` even, `b != 0`, `a` not a residue.
    L4i,
    /// `e/d` even, `b != 0`, `a` a residue, `f(x) = b^(2^alpha)` has no root.
    L7Unsolvable,
    L7Solvable,
    /// The superseded `Tr_d(a)`-split evaluation (see [`legacy_incorrect_s`]).
    Legacy4ii,
}

impl CaseTag {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::L1 => "L1",
            CaseTag::L2Zero => "L2-zero",
            CaseTag::L2Ambiguous => "L2-ambiguous",
            CaseTag::L3NonResidue => "L3-nonresidue",
            CaseTag::L3Residue => "L3-residue",
            CaseTag::L4i => "L4i",
            CaseTag::L7Unsolvable => "L7-unsolvable",
            CaseTag::L7Solvable => "L7-solvable",
            CaseTag::Legacy4ii => "L4ii-legacy",
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for CaseTag {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SumKind {
    Exact(i64),
    /// `±magnitude`; the sign is not determined in closed form.
    SignAmbiguous {
        magnitude: i64,
    },
}

/// A closed-form value of `S_alpha(a, b)` with the case that produced it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SumValue {
    pub kind: SumKind,
    pub case: CaseTag,
}

impl SumValue {
    fn exact(value: i64, case: CaseTag) -> Self {
        SumValue {
            kind: SumKind::Exact(value),
            case,
        }
    }

    pub fn exact_value(&self) -> Option<i64> {
        match self.kind {
            SumKind::Exact(v) => Some(v),
            SumKind::SignAmbiguous { .. } => None,
        }
    }

    pub fn is_ambiguous(&self) -> bool {
        matches!(self.kind, SumKind::SignAmbiguous { .. })
    }

    /// Whether an exhaustively computed value is compatible: equal for exact
    /// values, equal in absolute value for sign-ambiguous ones.
    pub fn admits(&self, oracle: i64) -> bool {
        match self.kind {
            SumKind::Exact(v) => v == oracle,
            SumKind::SignAmbiguous { magnitude } => oracle.abs() == magnitude,
        }
    }
}

impl fmt::Display for SumValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            SumKind::Exact(v) => write!(f, "{v}"),
            SumKind::SignAmbiguous { magnitude } => write!(f, "±{magnitude}"),
        }
    }
}

/// Direct evaluation of the character sum over all `q` elements.
pub fn brute_force_s(p: &SumParams<'_>) -> Result<i64> {
    let f = p.field;
    if f.degree() > MAX_BRUTE_FORCE_DEGREE {
        return Err(Error::CostRefused {
            operation: "exhaustive sum",
            e: f.degree(),
            limit: MAX_BRUTE_FORCE_DEGREE,
            estimate: f.size() as f64 * f.degree() as f64,
        });
    }
    Ok(f.elements()
        .map(|x| f.chi(p.quadratic_term(x) + f.mul(p.b, x)))
        .sum())
}

/// Closed-form `S_alpha(a, b)`.
pub fn closed_form_s(p: &SumParams<'_>) -> Result<SumValue> {
    let f = p.field;
    let e = f.degree();
    let d = p.d();

    if !p.quotient_even() {
        if p.b.is_zero() {
            return Ok(SumValue::exact(0, CaseTag::L1));
        }
        // x -> x^(2^alpha+1) is a bijection, so a has a unique such root c
        // and S(a, b) = S(1, b c^-1).
        let n = f.group_order();
        let exponent = (((1u64 << (p.alpha % e)) % n) + 1) % n;
        let root_exp = intmath::mod_inverse(exponent, n)
            .ok_or_else(|| Error::Invariant(format!("gcd(2^{} + 1, 2^{e} - 1) != 1", p.alpha)))?;
        let c = f.pow_u(p.a, root_exp);
        debug_assert_eq!(f.mul(f.frobenius(c, p.alpha), c), p.a);
        let reduced = f.mul(p.b, f.inv(c)?);
        return Ok(if f.trace_t(reduced, d)? == Element::ONE {
            SumValue {
                kind: SumKind::SignAmbiguous {
                    magnitude: 1 << ((e + d) / 2),
                },
                case: CaseTag::L2Ambiguous,
            }
        } else {
            SumValue::exact(0, CaseTag::L2Zero)
        });
    }

    let m = e / 2;
    let sign = neg_one_pow(m / d);
    let residue = p.a_is_residue();

    if p.b.is_zero() {
        return Ok(if residue {
            SumValue::exact(-sign << (m + d), CaseTag::L3Residue)
        } else {
            SumValue::exact(sign << m, CaseTag::L3NonResidue)
        });
    }

    let rhs = f.frobenius(p.b, p.alpha);
    let solution = solve_linearized(f, p.alpha, p.a, rhs)?;
    if !residue {
        if solution.kernel_dim() != 0 || !solution.solvable() {
            return Err(Error::Invariant(format!(
                "f is not a permutation for non-residue a = {} (kernel dimension {})",
                p.a,
                solution.kernel_dim()
            )));
        }
        let x0 = solution.particular().expect("permutation");
        return Ok(SumValue::exact(
            (sign << m) * f.chi(p.quadratic_term(x0)),
            CaseTag::L4i,
        ));
    }

    let Some(x0) = solution.particular() else {
        return Ok(SumValue::exact(0, CaseTag::L7Unsolvable));
    };
    let character = solution_character(p, &solution)?;
    debug_assert_eq!(character, f.chi(p.quadratic_term(x0)));
    Ok(SumValue::exact(
        (-sign << (m + d)) * character,
        CaseTag::L7Solvable,
    ))
}

/// `chi(a x0^(2^alpha+1))` for a solvable system, checked to be the same for
/// every solution `x0`.
///
/// `x -> Tr(a x^(2^alpha+1))` restricted to `x0 + ker f` is a quadratic
/// function of the kernel coordinates, so it is constant iff it is constant
/// on `x0`, `x0 + k_i` and `x0 + k_i + k_j` for the basis vectors `k_i`.
fn solution_character(p: &SumParams<'_>, solution: &LinearizedSolution) -> Result<i64> {
    let f = p.field;
    let x0 = solution.particular().expect("solvable");
    let expected = f.chi(p.quadratic_term(x0));
    let basis = solution.kernel_basis();
    for (i, &ki) in basis.iter().enumerate() {
        let shifted = std::iter::once(x0 + ki).chain(basis[i + 1..].iter().map(|&kj| x0 + ki + kj));
        for x in shifted {
            if f.chi(p.quadratic_term(x)) != expected {
                return Err(Error::Invariant(format!(
                    "chi(a x^(2^alpha+1)) differs between solutions {x0} and {x}"
                )));
            }
        }
    }
    Ok(expected)
}

/// The superseded evaluation for `e/d` even, `b != 0`, `a` a residue and a
/// solvable `f(x) = b^(2^alpha)`:
/// `-(-1)^(m/d) 2^(m+d) chi(a x0^(2^alpha+1))` if `Tr_d(a) = 0`, and
/// `(-1)^(m/d) 2^m chi(a x0^(2^alpha+1))` otherwise. The second half is wrong.
pub fn legacy_incorrect_s(p: &SumParams<'_>) -> Result<SumValue> {
    let f = p.field;
    let usage = |why: &str| {
        Err(Error::InvalidParameter(format!(
            "legacy evaluation applies only to e/d even, b != 0, residue a, solvable f(x) = b^(2^alpha): {why}"
        )))
    };
    if !p.quotient_even() {
        return usage("e/d is odd");
    }
    if p.b.is_zero() {
        return usage("b = 0");
    }
    if !p.a_is_residue() {
        return usage("a is not a residue");
    }
    let solution = solve_linearized(f, p.alpha, p.a, f.frobenius(p.b, p.alpha))?;
    let Some(x0) = solution.particular() else {
        return usage("f(x) = b^(2^alpha) has no solution");
    };
    let d = p.d();
    let m = f.degree() / 2;
    let sign = neg_one_pow(m / d);
    let character = f.chi(p.quadratic_term(x0));
    let value = if f.trace_t(p.a, d)?.is_zero() {
        (-sign << (m + d)) * character
    } else {
        (sign << m) * character
    };
    Ok(SumValue::exact(value, CaseTag::Legacy4ii))
}

/// Whether `p` falls in the branch [`legacy_incorrect_s`] covers.
pub fn legacy_applies(p: &SumParams<'_>) -> bool {
    p.quotient_even()
        && !p.b.is_zero()
        && p.a_is_residue()
        && solve_linearized(p.field, p.alpha, p.a, p.field.frobenius(p.b, p.alpha))
            .map(|s| s.solvable())
            .unwrap_or(false)
}

/// One `(a, b)` where the superseded evaluation applies with `Tr_d(a) != 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub a: Element,
    pub b: Element,
    pub legacy: i64,
    pub corrected: i64,
    pub oracle: i64,
}

impl Counterexample {
    pub fn legacy_wrong(&self) -> bool {
        self.legacy != self.oracle
    }
}

/// Scans `a` then `b` in increasing bit order for up to `limit` parameter
/// pairs with `a` a residue, `Tr_d(a) != 0` and `f(x) = b^(2^alpha)` solvable.
pub fn find_legacy_counterexamples(
    field: &Field,
    alpha: u32,
    limit: usize,
) -> Result<Vec<Counterexample>> {
    let mut found = Vec::new();
    let d = intmath::gcd(field.degree() as u64, alpha as u64) as u32;
    if (field.degree() / d) % 2 == 1 {
        return Err(Error::InvalidParameter(format!(
            "e/d = {} is odd; the superseded evaluation only covers e/d even",
            field.degree() / d
        )));
    }
    for a in field.nonzero_elements() {
        if field.trace_t(a, d)?.is_zero() {
            continue;
        }
        for b in field.nonzero_elements() {
            let p = SumParams::new(field, alpha, a, b)?;
            if !legacy_applies(&p) {
                continue;
            }
            let legacy = legacy_incorrect_s(&p)?;
            let corrected = closed_form_s(&p)?;
            found.push(Counterexample {
                a,
                b,
                legacy: legacy.exact_value().expect("legacy is exact"),
                corrected: corrected
                    .exact_value()
                    .expect("solvable residue branch is exact"),
                oracle: brute_force_s(&p)?,
            });
            if found.len() == limit {
                return Ok(found);
            }
        }
    }
    Ok(found)
}

/// For `b = 0` the closed form is always exact.
pub fn s_at_zero(field: &Field, alpha: u32, a: Element) -> Result<i64> {
    let p = SumParams::new(field, alpha, a, Element::ZERO)?;
    Ok(closed_form_s(&p)?
        .exact_value()
        .expect("b = 0 cases are exact"))
}

/// Closed form where available, exhaustive sum for the sign-ambiguous case.
pub fn resolved_s(p: &SumParams<'_>) -> Result<i64> {
    let value = closed_form_s(p)?;
    match value.exact_value() {
        Some(v) => Ok(v),
        None => brute_force_s(p),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cube_with_trace(f: &Field, trace: u8) -> Element {
        f.nonzero_elements()
            .find(|&a| {
                a != Element::ONE && f.is_power_residue(a, 3).unwrap() && f.abs_trace(a) == trace
            })
            .unwrap()
    }

    /// `b` with `b^2 = f(1) = a^2 + a`, i.e. `b = a + sqrt(a)`.
    fn b_for_unit_root(f: &Field, a: Element) -> Element {
        let b = a + f.frobenius(a, f.degree() - 1);
        assert_eq!(f.square(b), linearized_map(f, 1, a, Element::ONE));
        b
    }

    #[test]
    fn l1_is_zero() {
        let f = Field::new(5).unwrap();
        for a in f.nonzero_elements() {
            let p = SumParams::new(&f, 1, a, Element::ZERO).unwrap();
            assert_eq!(brute_force_s(&p).unwrap(), 0);
            assert_eq!(closed_form_s(&p).unwrap(), SumValue::exact(0, CaseTag::L1));
        }
    }

    #[test]
    fn l3_nonresidue_gf64_is_minus_eight() {
        let f = Field::new(6).unwrap();
        let p = SumParams::new(&f, 1, f.generator(), Element::ZERO).unwrap();
        assert_eq!(
            closed_form_s(&p).unwrap(),
            SumValue::exact(-8, CaseTag::L3NonResidue)
        );
        assert_eq!(brute_force_s(&p).unwrap(), -8);
    }

    #[test]
    fn corrected_branch_on_trace_one_cube() {
        let f = Field::new(6).unwrap();
        let a = cube_with_trace(&f, 1);
        let p = SumParams::new(&f, 1, a, b_for_unit_root(&f, a)).unwrap();
        assert_eq!(brute_force_s(&p).unwrap(), -16);
        assert_eq!(
            closed_form_s(&p).unwrap(),
            SumValue::exact(-16, CaseTag::L7Solvable)
        );
        assert_eq!(legacy_incorrect_s(&p).unwrap().exact_value(), Some(8));
    }

    #[test]
    fn corrected_branch_on_trace_zero_cube() {
        let f = Field::new(6).unwrap();
        let a = cube_with_trace(&f, 0);
        let p = SumParams::new(&f, 1, a, b_for_unit_root(&f, a)).unwrap();
        assert_eq!(brute_force_s(&p).unwrap(), 16);
        assert_eq!(closed_form_s(&p).unwrap().exact_value(), Some(16));
        assert_eq!(legacy_incorrect_s(&p).unwrap().exact_value(), Some(16));
    }

    #[test]
    fn legacy_outside_branch_is_usage_error() {
        let f = Field::new(6).unwrap();
        let p = SumParams::new(&f, 1, f.generator(), Element::ONE).unwrap();
        assert!(matches!(
            legacy_incorrect_s(&p),
            Err(Error::InvalidParameter(_))
        ));
        let p = SumParams::new(&f, 1, Element::ONE, Element::ZERO).unwrap();
        assert!(legacy_incorrect_s(&p).is_err());
        let f5 = Field::new(5).unwrap();
        let p = SumParams::new(&f5, 1, Element::ONE, Element::ONE).unwrap();
        assert!(legacy_incorrect_s(&p).is_err());
    }

    #[test]
    fn zero_a_rejected() {
        let f = Field::new(6).unwrap();
        assert!(matches!(
            SumParams::new(&f, 1, Element::ZERO, Element::ONE),
            Err(Error::ZeroArgument { .. })
        ));
        assert!(SumParams::new(&f, 0, Element::ONE, Element::ONE).is_err());
    }

    #[test]
    fn brute_force_cost_bound() {
        let f = Field::new(21).unwrap();
        let p = SumParams::new(&f, 1, Element::ONE, Element::ONE).unwrap();
        assert!(matches!(brute_force_s(&p), Err(Error::CostRefused { .. })));
    }

    #[test]
    fn alpha_beyond_e_reduces() {
        let f = Field::new(5).unwrap();
        for a in f.nonzero_elements() {
            for b in f.elements() {
                let p1 = SumParams::new(&f, 2, a, b).unwrap();
                let p2 = SumParams::new(&f, 7, a, b).unwrap();
                assert_eq!(brute_force_s(&p1).unwrap(), brute_force_s(&p2).unwrap());
                assert_eq!(closed_form_s(&p1).unwrap(), closed_form_s(&p2).unwrap());
            }
        }
    }

    #[test]
    fn counterexamples_in_gf16() {
        let f = Field::new(4).unwrap();
        let found = find_legacy_counterexamples(&f, 1, 5).unwrap();
        assert!(!found.is_empty());
        for c in &found {
            assert_eq!(c.corrected, c.oracle);
            assert!(c.legacy_wrong());
        }
    }
}
