use std::io::Write;

use rayon::prelude::*;
use threeweight::codes::{CodeSpec, OracleMode};
use threeweight::expsum::SumParams;
use threeweight::report::{check_code, compare_sum, legacy_record, CodeRecord, SumRecord, Summary};
use threeweight::{Element, Error, Field};

use crate::args::{Format, SweepArgs, SweepKind};
use crate::output::{CliError, Outcome};

/// Largest degree for sum sweeps: `(e - 1) q^3` multiplications.
const MAX_SUM_SWEEP_DEGREE: u32 = 10;

pub enum Row {
    Sum(SumRecord),
    Code(CodeRecord),
}

/// One batch of rows: every `b` for a fixed field, `alpha` or `h`, and `a`.
struct Unit<'f> {
    field: &'f Field,
    param: u32,
    a: Element,
}

pub fn fields(
    e: impl Iterator<Item = u32>,
    modulus: Option<u64>,
    alternate: bool,
) -> Result<Vec<Field>, CliError> {
    let degrees: Vec<u32> = e.collect();
    if modulus.is_some() && degrees.len() != 1 {
        return Err(CliError::usage(
            "--modulus needs a single degree, e.g. --e 6",
        ));
    }
    degrees
        .into_iter()
        .map(|e| {
            Ok(if alternate {
                Field::alternate(e)?
            } else {
                Field::from_parts(e, modulus)?
            })
        })
        .collect()
}

fn run_unit(kind: SweepKind, mode: OracleMode, u: &Unit<'_>) -> threeweight::Result<Vec<Row>> {
    let f = u.field;
    let mut rows = Vec::new();
    match kind {
        SweepKind::Sum => {
            for b in f.elements() {
                rows.push(Row::Sum(compare_sum(&SumParams::new(f, u.param, u.a, b)?)?));
            }
        }
        SweepKind::Legacy => {
            for b in f.nonzero_elements() {
                rows.extend(legacy_record(&SumParams::new(f, u.param, u.a, b)?)?.map(Row::Sum));
            }
        }
        SweepKind::Code => {
            for b in f.elements() {
                rows.push(Row::Code(check_code(
                    &CodeSpec::new(f, u.param, u.a, b)?,
                    mode,
                )?));
            }
        }
    }
    Ok(rows)
}

/// Runs every unit on `jobs` threads and returns the rows in input order.
pub fn collect_rows(
    kind: SweepKind,
    fields: &[Field],
    param: Option<u32>,
    mode: OracleMode,
    jobs: u32,
) -> Result<Vec<Row>, CliError> {
    let mut units = Vec::new();
    for f in fields {
        let e = f.degree();
        if kind == SweepKind::Sum && e > MAX_SUM_SWEEP_DEGREE {
            return Err(Error::CostRefused {
                operation: "sum sweep",
                e,
                limit: MAX_SUM_SWEEP_DEGREE,
                estimate: (e - 1) as f64 * (f.size() as f64).powi(3),
            }
            .into());
        }
        let params: Vec<u32> = match (kind, param) {
            (SweepKind::Code, Some(h)) => vec![h]
                .into_iter()
                .filter(|h| *h > 0 && *h < e && e % h == 0)
                .collect(),
            (SweepKind::Code, None) => (1..e).filter(|h| e % h == 0).collect(),
            (_, Some(alpha)) => vec![alpha],
            (_, None) => (1..e).collect(),
        };
        for p in params {
            for a in f.nonzero_elements() {
                units.push(Unit {
                    field: f,
                    param: p,
                    a,
                });
            }
        }
    }
    if units.is_empty() {
        return Err(CliError::usage("no instances selected; check --e and --h"));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs as usize)
        .build()
        .map_err(|e| CliError::usage(format!("cannot start {jobs} workers: {e}")))?;
    let batches: Vec<threeweight::Result<Vec<Row>>> =
        pool.install(|| units.par_iter().map(|u| run_unit(kind, mode, u)).collect());
    let mut rows = Vec::new();
    for batch in batches {
        rows.extend(batch?);
    }
    Ok(rows)
}

fn pretty_sum(r: &SumRecord) -> String {
    format!(
        "e={} alpha={} a={} b={} {} closed={} oracle={} {}",
        r.e,
        r.alpha,
        r.a_hex,
        r.b_hex,
        r.case_tag,
        r.closed_form,
        r.oracle,
        if r.matches { "ok" } else { "MISMATCH" }
    )
}

fn pretty_code(r: &CodeRecord) -> String {
    let v = r.violations();
    format!(
        "e={} h={} a={} b={} {} theorem={} oracle={} {}{}",
        r.spec.e,
        r.spec.h,
        r.spec.a_hex,
        r.spec.b_hex,
        r.table,
        r.theorem,
        r.oracle,
        if r.matches { "ok" } else { "MISMATCH" },
        if v.is_empty() {
            String::new()
        } else {
            format!(" violations={}", v.join("+"))
        }
    )
}

pub fn sweep(args: &SweepArgs, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let fields = fields(args.e.clone(), args.modulus, args.alternate)?;
    let param = match args.kind {
        SweepKind::Code => {
            if args.alpha.is_some() {
                return Err(CliError::usage(
                    "--alpha applies to sum and legacy sweeps; use --h",
                ));
            }
            args.h
        }
        _ => {
            if args.h.is_some() {
                return Err(CliError::usage("--h applies to code sweeps; use --alpha"));
            }
            args.alpha
        }
    };
    let mode = if args.paranoid {
        OracleMode::Paranoid
    } else {
        OracleMode::Factored
    };
    let rows = collect_rows(args.kind, &fields, param, mode, args.jobs)?;

    if args.format == Format::Csv {
        let header = match args.kind {
            SweepKind::Code => CodeRecord::CSV_HEADER,
            _ => SumRecord::CSV_HEADER,
        };
        writeln!(out, "{header}")?;
    }
    let mut summary = Summary::default();
    for row in &rows {
        match row {
            Row::Sum(r) => {
                summary.add_sum(r);
                match args.format {
                    Format::Json => writeln!(out, "{}", serde_json::to_string(r)?)?,
                    Format::Csv => writeln!(out, "{}", r.to_csv())?,
                    Format::Pretty => writeln!(out, "{}", pretty_sum(r))?,
                }
            }
            Row::Code(r) => {
                summary.add_code(r);
                match args.format {
                    Format::Json => writeln!(out, "{}", serde_json::to_string(r)?)?,
                    Format::Csv => writeln!(out, "{}", r.to_csv())?,
                    Format::Pretty => writeln!(out, "{}", pretty_code(r))?,
                }
            }
        }
    }
    out.flush()?;
    eprintln!(
        "summary: checked={} matched={} ambiguous={} mismatched={} violations={}",
        summary.checked, summary.matched, summary.ambiguous, summary.mismatched, summary.violations
    );
    Ok(Outcome::from_clean(summary.clean()))
}
