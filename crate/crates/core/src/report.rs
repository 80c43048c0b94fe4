//! Record types for sweeps and the weight-enumerator JSON document.
//!
//! Every record repeats the field's modulus and generator so it can be
//! reproduced on its own. Iteration orders are fixed (`a`, then `b`, in
//! increasing bit order), so identical inputs give identical reports.

use serde::Serialize;

use crate::codes::{
    build_defining_set, dual_distance_at_least_2, length_formula, pless_check,
    secret_sharing_check, weight_distribution_oracle, weight_distribution_theorem, CodeSpec,
    OracleMode, SecretSharingCheck, TableId, WeightDistribution, WeightRow,
};
use crate::error::Result;
use crate::expsum::{brute_force_s, closed_form_s, legacy_applies, legacy_incorrect_s, SumParams};
use crate::gf2::Field;

fn hex(v: u64) -> String {
    format!("{v:#x}")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SumRecord {
    pub e: u32,
    pub alpha: u32,
    pub modulus_hex: String,
    pub generator_hex: String,
    pub a_hex: String,
    pub b_hex: String,
    pub case_tag: String,
    /// `"-16"` for exact values, `"±16"` for sign-ambiguous ones.
    pub closed_form: String,
    pub oracle: i64,
    #[serde(rename = "match")]
    pub matches: bool,
    #[serde(skip)]
    pub ambiguous: bool,
}

impl SumRecord {
    pub const CSV_HEADER: &'static str =
        "e,alpha,modulus_hex,generator_hex,a_hex,b_hex,case_tag,closed_form,oracle,match";

    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.e,
            self.alpha,
            self.modulus_hex,
            self.generator_hex,
            self.a_hex,
            self.b_hex,
            self.case_tag,
            self.closed_form,
            self.oracle,
            self.matches
        )
    }
}

fn sum_record(
    p: &SumParams<'_>,
    case_tag: String,
    closed: String,
    matches: bool,
    ambiguous: bool,
    oracle: i64,
) -> SumRecord {
    let f = p.field();
    SumRecord {
        e: f.degree(),
        alpha: p.alpha(),
        modulus_hex: hex(f.modulus()),
        generator_hex: f.generator().to_string(),
        a_hex: p.a().to_string(),
        b_hex: p.b().to_string(),
        case_tag,
        closed_form: closed,
        oracle,
        matches,
        ambiguous,
    }
}

/// Closed form against the exhaustive sum for one parameter set.
pub fn compare_sum(p: &SumParams<'_>) -> Result<SumRecord> {
    let value = closed_form_s(p)?;
    let oracle = brute_force_s(p)?;
    Ok(sum_record(
        p,
        value.case.to_string(),
        value.to_string(),
        value.admits(oracle),
        value.is_ambiguous(),
        oracle,
    ))
}

/// [`compare_sum`] for every `a != 0` and every `b`.
pub fn sum_sweep(field: &Field, alpha: u32) -> Result<Vec<SumRecord>> {
    let mut out = Vec::with_capacity((field.group_order() * field.size()) as usize);
    for a in field.nonzero_elements() {
        for b in field.elements() {
            out.push(compare_sum(&SumParams::new(field, alpha, a, b)?)?);
        }
    }
    Ok(out)
}

/// The superseded evaluation against the exhaustive sum, or `None` when `p`
/// is outside its branch.
pub fn legacy_record(p: &SumParams<'_>) -> Result<Option<SumRecord>> {
    if !legacy_applies(p) {
        return Ok(None);
    }
    let legacy = legacy_incorrect_s(p)?;
    let oracle = brute_force_s(p)?;
    Ok(Some(sum_record(
        p,
        legacy.case.to_string(),
        legacy.to_string(),
        legacy.admits(oracle),
        false,
        oracle,
    )))
}

/// [`legacy_record`] over every `(a, b)`. Empty when `e / d` is odd.
pub fn legacy_sweep(field: &Field, alpha: u32) -> Result<Vec<SumRecord>> {
    let mut out = Vec::new();
    for a in field.nonzero_elements() {
        for b in field.nonzero_elements() {
            out.extend(legacy_record(&SumParams::new(field, alpha, a, b)?)?);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpecEcho {
    pub e: u32,
    pub h: u32,
    pub modulus_hex: String,
    pub generator_hex: String,
    pub a_hex: String,
    pub b_hex: String,
}

impl SpecEcho {
    pub fn of(spec: &CodeSpec<'_>) -> Self {
        let f = spec.field();
        SpecEcho {
            e: f.degree(),
            h: spec.h(),
            modulus_hex: hex(f.modulus()),
            generator_hex: f.generator().to_string(),
            a_hex: spec.a().to_string(),
            b_hex: spec.b().to_string(),
        }
    }
}

/// The weight-enumerator JSON document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EnumeratorDoc {
    pub n: u64,
    pub k: u32,
    pub delta: Option<u64>,
    /// `[n,k,delta]`.
    pub parameters: String,
    pub enumerator: String,
    pub rows: Vec<WeightRow>,
    pub provenance: String,
    pub spec: SpecEcho,
}

impl EnumeratorDoc {
    pub fn new(dist: &WeightDistribution, spec: &CodeSpec<'_>) -> Self {
        EnumeratorDoc {
            n: dist.n,
            k: dist.k,
            delta: dist.delta(),
            parameters: dist.parameters(),
            enumerator: dist.enumerator(),
            rows: dist.rows.clone(),
            provenance: dist.provenance.to_string(),
            spec: SpecEcho::of(spec),
        }
    }
}

/// Everything checked for one code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CodeRecord {
    #[serde(flatten)]
    pub spec: SpecEcho,
    pub table: TableId,
    pub n_formula: u64,
    pub n_counted: u64,
    pub theorem: String,
    pub oracle: String,
    #[serde(rename = "match")]
    pub matches: bool,
    pub pless_theorem: bool,
    pub pless_oracle: bool,
    pub dual_distance_ok: bool,
    pub zero_weight_messages: u64,
    pub distinct_weights: usize,
    pub secret_sharing: SecretSharingCheck,
}

impl CodeRecord {
    pub const CSV_HEADER: &'static str = "e,h,modulus_hex,generator_hex,a_hex,b_hex,table,n_formula,n_counted,theorem,oracle,match,pless_theorem,pless_oracle,dual_distance_ok,zero_weight_messages,distinct_weights,ss_condition,ss_applicable,ss_ratio_ok";

    /// Structural checks that failed, by name.
    pub fn violations(&self) -> Vec<&'static str> {
        let mut v = Vec::new();
        if self.n_formula != self.n_counted {
            v.push("length");
        }
        if !self.pless_theorem {
            v.push("pless-theorem");
        }
        if !self.pless_oracle {
            v.push("pless-oracle");
        }
        if !self.dual_distance_ok {
            v.push("dual-distance");
        }
        if self.zero_weight_messages > 0 {
            v.push("zero-weight-codeword");
        }
        if !self.secret_sharing.consistent() {
            v.push("secret-sharing");
        }
        v
    }

    pub fn to_csv(&self) -> String {
        let s = &self.spec;
        let ss = &self.secret_sharing;
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            s.e,
            s.h,
            s.modulus_hex,
            s.generator_hex,
            s.a_hex,
            s.b_hex,
            self.table,
            self.n_formula,
            self.n_counted,
            self.theorem,
            self.oracle,
            self.matches,
            self.pless_theorem,
            self.pless_oracle,
            self.dual_distance_ok,
            self.zero_weight_messages,
            self.distinct_weights,
            ss.condition_tag,
            ss.applicable,
            ss.ratio_ok
        )
    }
}

/// Theorem against oracle plus the structural checks, for one spec.
pub fn check_code(spec: &CodeSpec<'_>, mode: OracleMode) -> Result<CodeRecord> {
    let theorem = weight_distribution_theorem(spec)?;
    let oracle = weight_distribution_oracle(spec, mode)?;
    let ds = build_defining_set(spec)?;
    Ok(CodeRecord {
        spec: SpecEcho::of(spec),
        table: spec.table(),
        n_formula: length_formula(spec)?,
        n_counted: ds.len() as u64,
        theorem: theorem.enumerator(),
        oracle: oracle.enumerator(),
        matches: theorem.same_entries(&oracle),
        pless_theorem: pless_check(&theorem),
        pless_oracle: pless_check(&oracle),
        dual_distance_ok: dual_distance_at_least_2(&ds),
        zero_weight_messages: oracle.zero_weight_messages(),
        distinct_weights: oracle.distinct_nonzero_weights(),
        secret_sharing: secret_sharing_check(spec)?,
    })
}

/// Counts printed at the end of a sweep.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub checked: u64,
    pub matched: u64,
    pub ambiguous: u64,
    pub mismatched: u64,
    pub violations: u64,
}

impl Summary {
    pub fn add_sum(&mut self, r: &SumRecord) {
        self.checked += 1;
        if r.ambiguous {
            self.ambiguous += 1;
        }
        if r.matches {
            self.matched += 1;
        } else {
            self.mismatched += 1;
        }
    }

    pub fn add_code(&mut self, r: &CodeRecord) {
        self.checked += 1;
        if r.matches {
            self.matched += 1;
        } else {
            self.mismatched += 1;
        }
        if !r.violations().is_empty() {
            self.violations += 1;
        }
    }

    pub fn clean(&self) -> bool {
        self.mismatched == 0 && self.violations == 0
    }
}
