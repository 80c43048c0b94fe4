//! Weight distributions by counting, with no use of character sums.

use std::collections::BTreeMap;

use super::{build_defining_set, CodeSpec, Provenance, WeightDistribution};
use crate::error::{Error, Result};
use crate::gf2::{Element, Field};

/// Largest `e` accepted by [`weight_distribution_oracle`].
pub const MAX_ORACLE_DEGREE: u32 = 8;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OracleMode {
    /// Uses that membership in `D` splits as `F(x) = G(y)` with
    /// `F(x) = Tr(a x^(2^h+1))`, `G(y) = Tr(b y)`, so each weight is a sum of
    /// products of per-coordinate counts. `O(q^2)` per code.
    #[default]
    Factored,
    /// Materializes `D` and scans every position for every message.
    /// `O(q^2 n)` per code.
    Paranoid,
}

/// Counts `wt(c(u, v))` for every message `(u, v) != 0` and tallies them.
pub fn weight_distribution_oracle(
    spec: &CodeSpec<'_>,
    mode: OracleMode,
) -> Result<WeightDistribution> {
    let f = spec.field();
    let e = f.degree();
    if e > MAX_ORACLE_DEGREE {
        return Err(Error::CostRefused {
            operation: "exhaustive weight distribution",
            e,
            limit: MAX_ORACLE_DEGREE,
            estimate: (f.size() as f64).powi(4) / 2.0,
        });
    }
    let (n, histogram) = match mode {
        OracleMode::Factored => factored(spec),
        OracleMode::Paranoid => paranoid(spec)?,
    };
    Ok(WeightDistribution::from_histogram(
        n,
        2 * e,
        &histogram,
        Provenance::Oracle,
    ))
}

/// `counts[w][f][t] = #{z : label(z) = f, Tr(w z) = t}` for every `w`.
fn split_counts(f: &Field, label: &[u8]) -> Vec<[[u64; 2]; 2]> {
    f.elements()
        .map(|w| {
            let mut c = [[0u64; 2]; 2];
            for z in f.elements() {
                let t = f.abs_trace(f.mul(w, z));
                c[label[z.bits() as usize] as usize][t as usize] += 1;
            }
            c
        })
        .collect()
}

fn factored(spec: &CodeSpec<'_>) -> (u64, BTreeMap<u64, u64>) {
    let f = spec.field();
    let x_label: Vec<u8> = f
        .elements()
        .map(|x| f.abs_trace(f.mul(spec.a(), f.mul(f.frobenius(x, spec.h()), x))))
        .collect();
    let y_label: Vec<u8> = f
        .elements()
        .map(|y| f.abs_trace(f.mul(spec.b(), y)))
        .collect();
    let cx = split_counts(f, &x_label);
    let cy = split_counts(f, &y_label);

    // (x, y) in D iff labels agree; (0, 0) always agrees and never contributes weight
    let n = (0..2)
        .map(|l| (cx[0][l][0] + cx[0][l][1]) * (cy[0][l][0] + cy[0][l][1]))
        .sum::<u64>()
        - 1;

    let mut histogram = BTreeMap::new();
    for (u, cu) in cx.iter().enumerate() {
        for (v, cv) in cy.iter().enumerate() {
            if u == 0 && v == 0 {
                continue;
            }
            let w: u64 = (0..2)
                .map(|l| cu[l][0] * cv[l][1] + cu[l][1] * cv[l][0])
                .sum();
            *histogram.entry(w).or_insert(0) += 1;
        }
    }
    (n, histogram)
}

/// For each `w`, the word whose bit `i` is `Tr(w x^i)`, so that
/// `Tr(w z) = parity(z & mask)` for every `z`.
fn trace_forms(f: &Field) -> Vec<u32> {
    f.elements()
        .map(|w| {
            (0..f.degree()).fold(0u32, |acc, i| {
                acc | (f.abs_trace(f.mul(w, Element::from_bits(1 << i))) as u32) << i
            })
        })
        .collect()
}

fn paranoid(spec: &CodeSpec<'_>) -> Result<(u64, BTreeMap<u64, u64>)> {
    let f = spec.field();
    let e = f.degree();
    let ds = build_defining_set(spec)?;
    let packed: Vec<u32> = ds
        .pairs()
        .iter()
        .map(|&(x, y)| x.bits() | y.bits() << e)
        .collect();
    let forms = trace_forms(f);
    let mut histogram = BTreeMap::new();
    for &fu in &forms {
        for &fv in &forms {
            let mask = fu | fv << e;
            if mask == 0 {
                // the zero message; no other message has an all-zero trace form
                continue;
            }
            let w = packed
                .iter()
                .filter(|&&p| (p & mask).count_ones() & 1 == 1)
                .count() as u64;
            *histogram.entry(w).or_insert(0) += 1;
        }
    }
    Ok((ds.len() as u64, histogram))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{direct_weight, CodewordIndex};

    #[test]
    fn trace_forms_match_field_trace() {
        let f = Field::new(5).unwrap();
        let forms = trace_forms(&f);
        for w in f.elements() {
            for z in f.elements() {
                let parity = ((z.bits() & forms[w.bits() as usize]).count_ones() & 1) as u8;
                assert_eq!(parity, f.abs_trace(f.mul(w, z)));
            }
        }
        assert_eq!(forms.iter().filter(|&&m| m == 0).count(), 1);
    }

    #[test]
    fn modes_agree_with_literal_count() {
        let f = Field::new(4).unwrap();
        let spec = CodeSpec::new(&f, 1, f.generator(), f.gen_pow(7)).unwrap();
        let ds = build_defining_set(&spec).unwrap();
        let mut literal = BTreeMap::new();
        for u in f.elements() {
            for v in f.elements() {
                let idx = CodewordIndex::new(u, v);
                if !idx.is_zero() {
                    *literal.entry(direct_weight(&f, &ds, idx)).or_insert(0u64) += 1;
                }
            }
        }
        let want =
            WeightDistribution::from_histogram(ds.len() as u64, 8, &literal, Provenance::Oracle);
        assert_eq!(
            weight_distribution_oracle(&spec, OracleMode::Factored).unwrap(),
            want
        );
        assert_eq!(
            weight_distribution_oracle(&spec, OracleMode::Paranoid).unwrap(),
            want
        );
    }

    #[test]
    fn oracle_bound() {
        let f = Field::new(9).unwrap();
        let spec = CodeSpec::new(&f, 3, Element::ONE, Element::ZERO).unwrap();
        assert!(matches!(
            weight_distribution_oracle(&spec, OracleMode::Factored),
            Err(Error::CostRefused { .. })
        ));
    }
}
