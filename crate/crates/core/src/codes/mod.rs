//! Binary codes with defining set `D = {(x, y) != 0 : Tr(a x^(2^h+1) + b y) = 0}`.
//!
//! The codeword for a message `(u, v) in GF(q)^2` is
//! `c(u, v) = (Tr(u x + v y))_{(x, y) in D}`. Weight distributions are
//! produced twice: from the five closed-form tables ([`weight_distribution_theorem`])
//! and by counting ([`weight_distribution_oracle`]).

mod defining_set;
mod distribution;
mod oracle;
mod secret;
mod theorem;
mod weight;

use std::fmt;

use serde::Serialize;

pub use defining_set::{
    build_defining_set, dual_distance_at_least_2, length_formula, DefiningSet,
    MAX_DEFINING_SET_DEGREE,
};
pub use distribution::{pless_check, Provenance, WeightDistribution, WeightRow};
pub use oracle::{weight_distribution_oracle, OracleMode, MAX_ORACLE_DEGREE};
pub use secret::{secret_sharing_check, SecretSharingCheck};
pub use theorem::weight_distribution_theorem;
pub use weight::{codeword_weight, direct_weight, CodewordIndex};

use crate::error::{Error, Result};
use crate::expsum::SumParams;
use crate::gf2::{Element, Field};
use crate::intmath::neg_one_pow;

/// Parameters `(e, h, a, b)` of one code; `h` is a proper divisor of `e`.
#[derive(Clone, Copy, Debug)]
pub struct CodeSpec<'f> {
    field: &'f Field,
    h: u32,
    a: Element,
    b: Element,
}

impl<'f> CodeSpec<'f> {
    pub fn new(field: &'f Field, h: u32, a: Element, b: Element) -> Result<Self> {
        let e = field.degree();
        if h == 0 || !e.is_multiple_of(h) || h == e {
            return Err(Error::InvalidParameter(format!(
                "h = {h} is not a proper divisor of e = {e}"
            )));
        }
        if a.is_zero() {
            return Err(Error::ZeroArgument { what: "a" });
        }
        for (name, x) in [("a", a), ("b", b)] {
            if !field.contains(x) {
                return Err(Error::InvalidParameter(format!(
                    "{name} = {x} is outside GF(2^{e})"
                )));
            }
        }
        Ok(CodeSpec { field, h, a, b })
    }

    /// Every valid spec over `field`: `h` ascending, then `a`, then `b`.
    pub fn all(field: &'f Field) -> impl Iterator<Item = CodeSpec<'f>> + 'f {
        let e = field.degree();
        (1..e)
            .filter(move |h| e.is_multiple_of(*h))
            .flat_map(move |h| {
                field
                    .nonzero_elements()
                    .flat_map(move |a| field.elements().map(move |b| CodeSpec { field, h, a, b }))
            })
    }

    pub fn field(&self) -> &'f Field {
        self.field
    }

    pub fn h(&self) -> u32 {
        self.h
    }

    pub fn a(&self) -> Element {
        self.a
    }

    pub fn b(&self) -> Element {
        self.b
    }

    pub fn q(&self) -> u64 {
        self.field.size()
    }

    /// Whether `e / h` is even.
    pub fn quotient_even(&self) -> bool {
        (self.field.degree() / self.h).is_multiple_of(2)
    }

    /// `m = e / 2`.
    pub fn m(&self) -> u32 {
        self.field.degree() / 2
    }

    /// `(-1)^(m/h)`; only meaningful when `e / h` is even.
    pub fn sign(&self) -> i64 {
        neg_one_pow(self.m() / self.h)
    }

    /// Whether `a` lies in the subgroup of `(2^h + 1)`-th powers.
    pub fn a_is_residue(&self) -> bool {
        self.field
            .is_power_residue(self.a, (1u64 << self.h) + 1)
            .expect("a is nonzero")
    }

    pub fn table(&self) -> TableId {
        match (self.quotient_even(), self.b.is_zero(), self.a_is_residue()) {
            (false, _, _) => TableId::Table1,
            (true, true, false) => TableId::Table2,
            (true, true, true) => TableId::Table3,
            (true, false, false) => TableId::Table4,
            (true, false, true) => TableId::Table5,
        }
    }

    /// `S_h(a, b')` for the spec's `a`.
    pub fn sum_params(&self, b: Element) -> SumParams<'f> {
        SumParams::new(self.field, self.h, self.a, b).expect("spec already validated")
    }
}

impl fmt::Display for CodeSpec<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(q, h, a, b) = (2^{}, {}, {}, {})",
            self.field.degree(),
            self.h,
            self.a,
            self.b
        )
    }
}

/// The five closed-form weight tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TableId {
    /// `e/h` odd, any `b`.
    Table1,
    /// `e/h` even, `b = 0`, `a` not a residue.
    Table2,
    /// `e/h` even, `b = 0`, `a` a residue.
    Table3,
    /// `e/h` even, `b != 0`, `a` not a residue.
    Table4,
    /// `e/h` even, `b != 0`, `a` a residue.
    Table5,
}

impl TableId {
    pub fn number(self) -> u8 {
        match self {
            TableId::Table1 => 1,
            TableId::Table2 => 2,
            TableId::Table3 => 3,
            TableId::Table4 => 4,
            TableId::Table5 => 5,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            TableId::Table1 => "table1",
            TableId::Table2 => "table2",
            TableId::Table3 => "table3",
            TableId::Table4 => "table4",
            TableId::Table5 => "table5",
        }
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for TableId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn proper_divisor_required() {
        let f = Field::new(6).unwrap();
        assert!(CodeSpec::new(&f, 4, Element::ONE, Element::ZERO).is_err());
        assert!(CodeSpec::new(&f, 6, Element::ONE, Element::ZERO).is_err());
        assert!(CodeSpec::new(&f, 0, Element::ONE, Element::ZERO).is_err());
        assert!(CodeSpec::new(&f, 1, Element::ZERO, Element::ZERO).is_err());
        assert!(CodeSpec::new(&f, 2, Element::ONE, Element::ZERO).is_ok());
    }

    #[test]
    fn table_dispatch() {
        let f = Field::new(6).unwrap();
        let g = f.generator();
        let spec = |h, a, b| CodeSpec::new(&f, h, a, b).unwrap().table();
        assert_eq!(spec(2, Element::ONE, Element::ZERO), TableId::Table1);
        assert_eq!(spec(1, g, Element::ZERO), TableId::Table2);
        assert_eq!(spec(1, f.gen_pow(3), Element::ZERO), TableId::Table3);
        assert_eq!(spec(1, g, Element::ONE), TableId::Table4);
        assert_eq!(spec(1, Element::ONE, Element::ONE), TableId::Table5);
    }

    #[test]
    fn all_specs_count() {
        let f = Field::new(6).unwrap();
        assert_eq!(CodeSpec::all(&f).count(), 3 * 63 * 64);
    }
}
