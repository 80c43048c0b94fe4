use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use super::TableId;

/// Where a distribution came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    Theorem(TableId),
    Oracle,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Theorem(t) => write!(f, "theorem:{t}"),
            Provenance::Oracle => f.write_str("oracle"),
        }
    }
}

impl Serialize for Provenance {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct WeightRow {
    pub w: u64,
    #[serde(rename = "A")]
    pub count: u64,
}

/// Multiplicities of codeword weights over the `2^k - 1` nonzero messages.
///
/// Rows are ascending in `w`. Rows with `count = 0` are kept when a table
/// produces them. A row with `w = 0` appears only when nonzero messages
/// map to the zero codeword.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightDistribution {
    pub n: u64,
    pub k: u32,
    pub rows: Vec<WeightRow>,
    pub provenance: Provenance,
}

impl WeightDistribution {
    pub(crate) fn from_histogram(
        n: u64,
        k: u32,
        histogram: &BTreeMap<u64, u64>,
        provenance: Provenance,
    ) -> Self {
        WeightDistribution {
            n,
            k,
            rows: histogram
                .iter()
                .map(|(&w, &count)| WeightRow { w, count })
                .collect(),
            provenance,
        }
    }

    /// Rows with nonzero multiplicity.
    pub fn support(&self) -> impl Iterator<Item = WeightRow> + '_ {
        self.rows.iter().copied().filter(|r| r.count > 0)
    }

    /// Rows that a table lists with multiplicity zero.
    pub fn degenerate_rows(&self) -> impl Iterator<Item = WeightRow> + '_ {
        self.rows.iter().copied().filter(|r| r.count == 0)
    }

    /// Minimum distance: the least positive weight that occurs.
    pub fn delta(&self) -> Option<u64> {
        self.support().map(|r| r.w).find(|&w| w > 0)
    }

    pub fn w_max(&self) -> Option<u64> {
        self.support().map(|r| r.w).filter(|&w| w > 0).max()
    }

    /// Nonzero messages whose codeword is zero.
    pub fn zero_weight_messages(&self) -> u64 {
        self.support().filter(|r| r.w == 0).map(|r| r.count).sum()
    }

    /// Number of distinct positive weights that occur.
    pub fn distinct_nonzero_weights(&self) -> usize {
        self.support().filter(|r| r.w > 0).count()
    }

    /// Equality of length, dimension and occurring weights with their
    /// multiplicities; zero-multiplicity rows and provenance are ignored.
    pub fn same_entries(&self, other: &WeightDistribution) -> bool {
        self.n == other.n && self.k == other.k && self.support().eq(other.support())
    }

    /// Weight enumerator in the usual `1+A1x^w1+...` notation, omitting
    /// zero-multiplicity terms. Messages with a zero codeword fold into the
    /// constant term.
    pub fn enumerator(&self) -> String {
        let constant = 1 + self.zero_weight_messages();
        let mut out = constant.to_string();
        for r in self.support().filter(|r| r.w > 0) {
            out.push_str(&format!("+{}x^{}", r.count, r.w));
        }
        out
    }

    /// `[n, k, delta]`.
    pub fn parameters(&self) -> String {
        match self.delta() {
            Some(d) => format!("[{},{},{}]", self.n, self.k, d),
            None => format!("[{},{}]", self.n, self.k),
        }
    }

    /// `w,A` lines with a header, one per row including degenerate ones.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("w,A\n");
        for r in &self.rows {
            out.push_str(&format!("{},{}\n", r.w, r.count));
        }
        out
    }
}

/// The first two power moments for a code whose dual distance is at least 2:
/// `sum A_w = 2^k - 1` and `sum w A_w = n 2^(k-1)`.
pub fn pless_check(w: &WeightDistribution) -> bool {
    let total: u128 = w.rows.iter().map(|r| r.count as u128).sum();
    let first: u128 = w.rows.iter().map(|r| r.w as u128 * r.count as u128).sum();
    total == (1u128 << w.k) - 1 && first == w.n as u128 * (1u128 << (w.k - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example3() -> WeightDistribution {
        WeightDistribution {
            n: 511,
            k: 10,
            rows: vec![
                WeightRow { w: 192, count: 10 },
                WeightRow {
                    w: 256,
                    count: 1007,
                },
                WeightRow { w: 320, count: 6 },
            ],
            provenance: Provenance::Oracle,
        }
    }

    #[test]
    fn moments_hold_and_break() {
        let mut w = example3();
        assert!(pless_check(&w));
        w.rows[1].count += 1;
        assert!(!pless_check(&w));

        let ex5 = WeightDistribution {
            n: 1791,
            k: 12,
            rows: vec![
                WeightRow { w: 768, count: 36 },
                WeightRow {
                    w: 896,
                    count: 4032,
                },
                WeightRow { w: 1024, count: 27 },
            ],
            provenance: Provenance::Oracle,
        };
        assert!(pless_check(&ex5));
    }

    #[test]
    fn enumerator_and_parameters() {
        let w = example3();
        assert_eq!(w.enumerator(), "1+10x^192+1007x^256+6x^320");
        assert_eq!(w.parameters(), "[511,10,192]");
        assert_eq!(w.to_csv().lines().count(), 4);
    }

    #[test]
    fn zero_rows_ignored_in_comparison() {
        let a = example3();
        let mut b = example3();
        b.rows.push(WeightRow { w: 400, count: 0 });
        assert!(a.same_entries(&b));
        assert_eq!(b.degenerate_rows().count(), 1);
    }
}
