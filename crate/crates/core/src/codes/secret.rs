//! The `w_min / w_max > 1/2` criterion for minimal codewords.
//!
//! Each table comes with a sufficient condition on `(e, h)`:
//!
//! 1. Table 1 and `e > h + 1`;
//! 2. Table 2 and `e > 3 - (-1)^(m/h)`;
//! 3. Table 3 and `m > h + 1 + (-1)^(m/h)`;
//! 4. Table 4 and `m > 1`;
//! 5. Table 5 and `m > h + 1`.

use serde::Serialize;

use super::{weight_distribution_theorem, CodeSpec, TableId};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SecretSharingCheck {
    pub table: TableId,
    /// Number of the condition attached to `table` (1 to 5).
    pub condition_tag: u8,
    /// Whether that condition's inequality holds.
    pub applicable: bool,
    pub w_min: u64,
    pub w_max: u64,
    /// `w_min / w_max > 1/2` over the weights that actually occur.
    pub ratio_ok: bool,
}

impl SecretSharingCheck {
    /// The condition is sufficient: when it holds, the ratio must exceed 1/2.
    pub fn consistent(&self) -> bool {
        !self.applicable || self.ratio_ok
    }

    /// The condition holds exactly when the ratio exceeds 1/2.
    pub fn condition_is_exact(&self) -> bool {
        self.applicable == self.ratio_ok
    }
}

pub fn secret_sharing_check(spec: &CodeSpec<'_>) -> Result<SecretSharingCheck> {
    let e = spec.field().degree() as i64;
    let h = spec.h() as i64;
    let m = spec.m() as i64;
    let table = spec.table();
    let applicable = match table {
        TableId::Table1 => e > h + 1,
        TableId::Table2 => e > 3 - spec.sign(),
        TableId::Table3 => m > h + 1 + spec.sign(),
        TableId::Table4 => m > 1,
        TableId::Table5 => m > h + 1,
    };
    let dist = weight_distribution_theorem(spec)?;
    let (Some(w_min), Some(w_max)) = (dist.delta(), dist.w_max()) else {
        return Err(Error::Invariant(format!("no nonzero weight for {spec}")));
    };
    Ok(SecretSharingCheck {
        table,
        condition_tag: table.number(),
        applicable,
        w_min,
        w_max,
        ratio_ok: 2 * w_min > w_max,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::{Element, Field};

    #[test]
    fn condition_one_example() {
        let f = Field::new(5).unwrap();
        let c = secret_sharing_check(&CodeSpec::new(&f, 1, Element::ONE, Element::ZERO).unwrap())
            .unwrap();
        assert_eq!((c.condition_tag, c.applicable, c.ratio_ok), (1, true, true));
        assert_eq!((c.w_min, c.w_max), (192, 320));
    }

    #[test]
    fn condition_four_example() {
        let f = Field::new(6).unwrap();
        let c = secret_sharing_check(&CodeSpec::new(&f, 1, f.generator(), Element::ONE).unwrap())
            .unwrap();
        assert_eq!((c.condition_tag, c.applicable, c.ratio_ok), (4, true, true));
        assert_eq!((c.w_min, c.w_max), (896, 1152));
    }

    #[test]
    fn condition_five_fails_at_e4() {
        // table 5 at e = 4, h = 1: weights 32, 64, 96
        let f = Field::new(4).unwrap();
        let c = secret_sharing_check(&CodeSpec::new(&f, 1, Element::ONE, Element::ONE).unwrap())
            .unwrap();
        assert_eq!(c.table, TableId::Table5);
        assert!(!c.applicable);
        assert!(!c.ratio_ok);
        assert_eq!((c.w_min, c.w_max), (32, 96));
    }

    #[test]
    fn condition_one_is_not_sufficient_at_e3() {
        // e = 3, h = 1: weights 8, 16, 24 and e > h + 1 holds
        let f = Field::new(3).unwrap();
        let c = secret_sharing_check(&CodeSpec::new(&f, 1, Element::ONE, Element::ZERO).unwrap())
            .unwrap();
        assert!(c.applicable);
        assert!(!c.ratio_ok);
        assert!(!c.consistent());
    }
}
