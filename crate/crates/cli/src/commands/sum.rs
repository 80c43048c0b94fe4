use std::io::Write;

use serde::Serialize;
use threeweight::expsum::{brute_force_s, closed_form_s, SumParams};

use crate::args::{Format, SumArgs};
use crate::output::{field, CliError, Outcome};

#[derive(Serialize)]
struct SumReport {
    e: u32,
    alpha: u32,
    modulus_hex: String,
    generator_hex: String,
    a_hex: String,
    b_hex: String,
    case_tag: String,
    closed_form: String,
    oracle: Option<i64>,
    #[serde(rename = "match")]
    matches: Option<bool>,
}

const CSV_HEADER: &str =
    "e,alpha,modulus_hex,generator_hex,a_hex,b_hex,case_tag,closed_form,oracle,match";

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

pub fn sum(args: &SumArgs, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let f = field(&args.field)?;
    let a = f.parse_element(&args.a)?;
    let b = f.parse_element(&args.b)?;
    let p = SumParams::new(&f, args.alpha, a, b)?;
    let value = closed_form_s(&p)?;
    let oracle = if args.paranoid || (args.resolve_signs && value.is_ambiguous()) {
        Some(brute_force_s(&p)?)
    } else {
        None
    };
    let r = SumReport {
        e: f.degree(),
        alpha: args.alpha,
        modulus_hex: format!("{:#x}", f.modulus()),
        generator_hex: f.generator().to_string(),
        a_hex: a.to_string(),
        b_hex: b.to_string(),
        case_tag: value.case.to_string(),
        closed_form: value.to_string(),
        oracle,
        matches: oracle.map(|o| value.admits(o)),
    };

    match args.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(&r)?)?,
        Format::Csv => {
            writeln!(out, "{CSV_HEADER}")?;
            writeln!(
                out,
                "{},{},{},{},{},{},{},{},{},{}",
                r.e,
                r.alpha,
                r.modulus_hex,
                r.generator_hex,
                r.a_hex,
                r.b_hex,
                r.case_tag,
                r.closed_form,
                opt(r.oracle),
                opt(r.matches)
            )?;
        }
        Format::Pretty => {
            writeln!(out, "field   {f}")?;
            writeln!(out, "sum     S_{}({}, {})", args.alpha, r.a_hex, r.b_hex)?;
            writeln!(out, "case    {}", r.case_tag)?;
            writeln!(out, "closed  {}", r.closed_form)?;
            if let (Some(o), Some(m)) = (r.oracle, r.matches) {
                writeln!(out, "oracle  {o}")?;
                writeln!(out, "match   {m}")?;
            }
        }
    }
    Ok(Outcome::from_clean(r.matches != Some(false)))
}
