//! Closed-form weight distributions.
//!
//! With `q = 2^e`, `m = e/2` and `s = (-1)^(m/h)`, the nonzero weights and
//! multiplicities are
//!
//! * Table 1 (`e/h` odd): `q^2/4` x `q^2 - 2^(e-h) - 1`,
//!   `q(q ∓ 2^((e+h)/2))/4` x `2^(e-h-1) ± 2^((e-h-2)/2)`.
//! * Table 2 (`b = 0`, non-residue): `q(q + s 2^m)/4` x `q(q-1)`,
//!   `q^2/4` x `q/2 + s 2^(m-1) - 1`, `q(q + s 2^(m+1))/4` x `q/2 - s 2^(m-1)`.
//! * Table 3 (`b = 0`, residue): `q(q - s 2^(m+h))/4` x `q^2 - 2^(e-2h)`,
//!   `q^2/4` x `2^(e-2h-1) - s 2^(m-h-1) - 1`,
//!   `q(q - s 2^(m+h+1))/4` x `2^(e-2h-1) + s 2^(m-h-1)`.
//! * Table 4 (`b != 0`, non-residue): `q^2/4` x `q^2 - q - 1`,
//!   `q(q ∓ 2^m)/4` x `q/2 ± 2^(m-1)`.
//! * Table 5 (`b != 0`, residue): `q^2/4` x `q^2 - 2^(e-2h) - 1`,
//!   `q(q ∓ 2^(m+h))/4` x `2^(e-2h-1) ± 2^(m-h-1)`.
//!
//! Multiplicities are evaluated in exact rationals: for `e = 2h` the terms
//! `2^(e-2h-1)` and `2^(m-h-1)` are `1/2`, and only their combination is an
//! integer (zero).

use std::collections::BTreeMap;

use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};

use super::{length_formula, CodeSpec, Provenance, TableId, WeightDistribution, WeightRow};
use crate::error::{Error, Result};

type Q = Ratio<i128>;

fn p2(k: i64) -> Q {
    if k >= 0 {
        Q::from_integer(1i128 << k)
    } else {
        Q::new(1, 1i128 << (-k))
    }
}

fn int(v: i64) -> Q {
    Q::from_integer(v as i128)
}

/// Weight distribution read off the table selected by [`CodeSpec::table`].
pub fn weight_distribution_theorem(spec: &CodeSpec<'_>) -> Result<WeightDistribution> {
    let e = spec.field().degree() as i64;
    let h = spec.h() as i64;
    let m = spec.m() as i64;
    let q = p2(e);
    let q2 = q * q;
    let quarter = Q::new(1, 4);
    let half = Q::new(1, 2);
    let one = Q::from_integer(1);
    let table = spec.table();
    let s = if spec.quotient_even() {
        int(spec.sign())
    } else {
        one
    };

    let rows: [(Q, Q); 3] = match table {
        TableId::Table1 => {
            let offset = p2((e + h) / 2);
            let split = p2((e - h - 2) / 2);
            [
                (quarter * q2, q2 - p2(e - h) - one),
                (quarter * q * (q - offset), p2(e - h - 1) + split),
                (quarter * q * (q + offset), p2(e - h - 1) - split),
            ]
        }
        TableId::Table2 => [
            (quarter * q * (q + s * p2(m)), q * (q - one)),
            (quarter * q2, half * q + s * p2(m - 1) - one),
            (quarter * q * (q + s * p2(m + 1)), half * q - s * p2(m - 1)),
        ],
        TableId::Table3 => [
            (quarter * q * (q - s * p2(m + h)), q2 - p2(e - 2 * h)),
            (quarter * q2, p2(e - 2 * h - 1) - s * p2(m - h - 1) - one),
            (
                quarter * q * (q - s * p2(m + h + 1)),
                p2(e - 2 * h - 1) + s * p2(m - h - 1),
            ),
        ],
        TableId::Table4 => [
            (quarter * q2, q2 - q - one),
            (quarter * q * (q - p2(m)), half * q + p2(m - 1)),
            (quarter * q * (q + p2(m)), half * q - p2(m - 1)),
        ],
        TableId::Table5 => [
            (quarter * q2, q2 - p2(e - 2 * h) - one),
            (
                quarter * q * (q - p2(m + h)),
                p2(e - 2 * h - 1) + p2(m - h - 1),
            ),
            (
                quarter * q * (q + p2(m + h)),
                p2(e - 2 * h - 1) - p2(m - h - 1),
            ),
        ],
    };
    if table == TableId::Table1 && (e - h) % 2 != 0 {
        return Err(Error::Invariant(format!("e - h odd in table 1 for {spec}")));
    }

    let mut histogram = BTreeMap::new();
    for (w, count) in rows {
        let w = to_count(w, "weight", spec)?;
        let count = to_count(count, "multiplicity", spec)?;
        if histogram.insert(w, count).is_some() {
            return Err(Error::Invariant(format!(
                "{table} repeats weight {w} for {spec}"
            )));
        }
    }
    let n = length_formula(spec)?;
    let dist = WeightDistribution::from_histogram(
        n,
        2 * spec.field().degree(),
        &histogram,
        Provenance::Theorem(table),
    );
    debug_assert!(dist.rows.windows(2).all(|p: &[WeightRow]| p[0].w < p[1].w));
    Ok(dist)
}

fn to_count(v: Q, what: &str, spec: &CodeSpec<'_>) -> Result<u64> {
    if !v.is_integer() || v < Q::zero() {
        return Err(Error::Invariant(format!(
            "table {what} {v} is not a nonnegative integer for {spec}"
        )));
    }
    v.to_integer()
        .to_u64()
        .ok_or_else(|| Error::Invariant(format!("table {what} {v} overflows for {spec}")))
}
