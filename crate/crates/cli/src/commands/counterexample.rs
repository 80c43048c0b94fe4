use std::io::Write;

use serde::Serialize;
use threeweight::expsum::{find_legacy_counterexamples, Counterexample};

use crate::args::{CounterexampleArgs, Format};
use crate::output::{field, CliError, Outcome};

#[derive(Serialize)]
struct Row<'c> {
    e: u32,
    alpha: u32,
    modulus_hex: String,
    generator_hex: String,
    #[serde(flatten)]
    found: &'c Counterexample,
    legacy_wrong: bool,
}

pub fn counterexample(args: &CounterexampleArgs, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let f = field(&args.field)?;
    let found = find_legacy_counterexamples(&f, args.alpha, args.count)?;
    let rows: Vec<Row<'_>> = found
        .iter()
        .map(|c| Row {
            e: f.degree(),
            alpha: args.alpha,
            modulus_hex: format!("{:#x}", f.modulus()),
            generator_hex: f.generator().to_string(),
            found: c,
            legacy_wrong: c.legacy_wrong(),
        })
        .collect();
    match args.format {
        Format::Json => {
            for r in &rows {
                writeln!(out, "{}", serde_json::to_string(r)?)?;
            }
        }
        Format::Csv => {
            writeln!(
                out,
                "e,alpha,modulus_hex,generator_hex,a,b,legacy,corrected,oracle,legacy_wrong"
            )?;
            for r in &rows {
                writeln!(
                    out,
                    "{},{},{},{},{},{},{},{},{},{}",
                    r.e,
                    r.alpha,
                    r.modulus_hex,
                    r.generator_hex,
                    r.found.a,
                    r.found.b,
                    r.found.legacy,
                    r.found.corrected,
                    r.found.oracle,
                    r.legacy_wrong
                )?;
            }
        }
        Format::Pretty => {
            writeln!(out, "field {f}, alpha = {}", args.alpha)?;
            if rows.is_empty() {
                writeln!(out, "none")?;
            }
            for r in &rows {
                let a = f
                    .display_power(r.found.a)
                    .unwrap_or_else(|_| r.found.a.to_string());
                writeln!(
                    out,
                    "a={} ({a}) b={} legacy={} corrected={} oracle={}{}",
                    r.found.a,
                    r.found.b,
                    r.found.legacy,
                    r.found.corrected,
                    r.found.oracle,
                    if r.legacy_wrong { " legacy wrong" } else { "" }
                )?;
            }
        }
    }
    Ok(Outcome::Ok)
}
