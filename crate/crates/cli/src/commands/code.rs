use std::io::Write;

use serde::Serialize;
use threeweight::codes::{
    secret_sharing_check, weight_distribution_oracle, weight_distribution_theorem, CodeSpec,
    OracleMode, SecretSharingCheck, TableId, WeightDistribution,
};
use threeweight::report::EnumeratorDoc;

use crate::args::{CodeArgs, Format};
use crate::output::{field, yes_no, CliError, Outcome};

#[derive(Serialize)]
struct CodeReport {
    table: TableId,
    theorem: EnumeratorDoc,
    oracle: Option<EnumeratorDoc>,
    #[serde(rename = "match")]
    matches: Option<bool>,
    secret_sharing: SecretSharingCheck,
}

fn csv_rows(out: &mut dyn Write, source: &str, d: &WeightDistribution) -> std::io::Result<()> {
    for r in &d.rows {
        writeln!(out, "{source},{},{}", r.w, r.count)?;
    }
    Ok(())
}

pub fn code(args: &CodeArgs, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let f = field(&args.field)?;
    let a = f.parse_element(&args.a)?;
    let b = f.parse_element(&args.b)?;
    let spec = CodeSpec::new(&f, args.h, a, b)?;
    let theorem = weight_distribution_theorem(&spec)?;
    let oracle = if args.paranoid {
        Some(weight_distribution_oracle(&spec, OracleMode::Paranoid)?)
    } else {
        None
    };
    let matches = oracle.as_ref().map(|o| theorem.same_entries(o));
    let ss = secret_sharing_check(&spec)?;

    match args.format {
        Format::Json => {
            let r = CodeReport {
                table: spec.table(),
                theorem: EnumeratorDoc::new(&theorem, &spec),
                oracle: oracle.as_ref().map(|o| EnumeratorDoc::new(o, &spec)),
                matches,
                secret_sharing: ss,
            };
            writeln!(out, "{}", serde_json::to_string(&r)?)?;
        }
        Format::Csv => {
            writeln!(out, "source,w,A")?;
            csv_rows(out, "theorem", &theorem)?;
            if let Some(o) = &oracle {
                csv_rows(out, "oracle", o)?;
            }
        }
        Format::Pretty => {
            writeln!(out, "{} {}", theorem.parameters(), spec.table())?;
            writeln!(out, "field    {f}")?;
            writeln!(out, "spec     h = {}, a = {a}, b = {b}", args.h)?;
            writeln!(out, "theorem  {}", theorem.enumerator())?;
            for r in theorem.degenerate_rows() {
                writeln!(out, "         (weight {} listed with multiplicity 0)", r.w)?;
            }
            if theorem.zero_weight_messages() > 0 {
                writeln!(
                    out,
                    "         {} nonzero messages give the zero codeword",
                    theorem.zero_weight_messages()
                )?;
            }
            if let (Some(o), Some(m)) = (&oracle, matches) {
                writeln!(
                    out,
                    "oracle   {} ({})",
                    o.enumerator(),
                    if m { "match" } else { "MISMATCH" }
                )?;
            }
            writeln!(
                out,
                "minimal  condition {} holds: {}; w_min/w_max = {}/{} > 1/2: {}",
                ss.condition_tag,
                yes_no(ss.applicable),
                ss.w_min,
                ss.w_max,
                yes_no(ss.ratio_ok)
            )?;
        }
    }
    Ok(Outcome::from_clean(matches != Some(false)))
}
