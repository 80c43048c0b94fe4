use std::collections::BTreeMap;
use std::io::Write;

use threeweight::codes::{weight_distribution_theorem, CodeSpec, OracleMode};
use threeweight::expsum::{brute_force_s, closed_form_s, SumParams};
use threeweight::{Element, Field};

use super::sweep::{collect_rows, fields, Row};
use crate::args::{SweepKind, VerifyArgs};
use crate::output::{CliError, Outcome};

/// `(e, h, a, b, enumerator)` with `a` and `b` in `g^k` form ("1" is g^0,
/// "0" is zero). `g` is a non-cube for every modulus table shipped.
const REFERENCE_CODES: [(u32, u32, &str, &str, &str); 7] = [
    (5, 1, "g^0", "0", "1+10x^192+1007x^256+6x^320"),
    (5, 1, "g^0", "g^0", "1+10x^192+1007x^256+6x^320"),
    (6, 1, "g", "0", "1+36x^768+4032x^896+27x^1024"),
    (6, 1, "g^0", "0", "1+9x^1024+4080x^1280+6x^1536"),
    (6, 1, "g^3", "0", "1+9x^1024+4080x^1280+6x^1536"),
    (6, 1, "g", "g^0", "1+36x^896+4031x^1024+28x^1152"),
    (6, 1, "g^0", "g^0", "1+10x^768+4079x^1024+6x^1280"),
];

struct Checks<'o> {
    out: &'o mut dyn Write,
    failed: usize,
}

impl Checks<'_> {
    fn line(&mut self, ok: bool, what: &str) -> std::io::Result<()> {
        if !ok {
            self.failed += 1;
        }
        writeln!(self.out, "{} {what}", if ok { "PASS" } else { "FAIL" })
    }
}

fn element(f: &Field, s: &str) -> Result<Element, CliError> {
    if s == "0" {
        return Ok(Element::ZERO);
    }
    Ok(f.parse_element(s)?)
}

pub fn verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let mut c = Checks { out, failed: 0 };
    let table = |e| -> Result<Field, CliError> {
        Ok(if args.alternate {
            Field::alternate(e)?
        } else {
            Field::new(e)?
        })
    };

    let f6 = Field::new(6)?;
    let g = |k| f6.gen_pow(k);
    for (a, b, want) in [(g(3), g(3) + g(33), -16), (g(9), g(9) + g(36), 16)] {
        let p = SumParams::new(&f6, 1, a, b)?;
        let closed = closed_form_s(&p)?;
        let oracle = brute_force_s(&p)?;
        c.line(
            closed.exact_value() == Some(want) && oracle == want,
            &format!(
                "sum e=6 alpha=1 a={a} b={b}: closed {closed}, oracle {oracle}, expected {want}"
            ),
        )?;
    }

    for (e, h, a, b, want) in REFERENCE_CODES {
        let f = table(e)?;
        let spec = CodeSpec::new(&f, h, element(&f, a)?, element(&f, b)?)?;
        let got = weight_distribution_theorem(&spec)?;
        c.line(
            got.enumerator() == want,
            &format!(
                "code {spec} over {f}: {} {}",
                got.parameters(),
                got.enumerator()
            ),
        )?;
    }

    let fields = fields(args.e.clone(), None, args.alternate)?;
    let rows = collect_rows(
        SweepKind::Code,
        &fields,
        None,
        OracleMode::Factored,
        args.jobs,
    )?;
    let mut checked = BTreeMap::<u32, u64>::new();
    let mut mismatched = BTreeMap::<u32, u64>::new();
    let mut violations = BTreeMap::<(u32, &'static str), u64>::new();
    for row in &rows {
        let Row::Code(r) = row else { continue };
        *checked.entry(r.spec.e).or_default() += 1;
        if !r.matches {
            *mismatched.entry(r.spec.e).or_default() += 1;
        }
        for kind in [
            "length",
            "pless-theorem",
            "pless-oracle",
            "dual-distance",
            "zero-weight-codeword",
            "secret-sharing",
        ] {
            violations.entry((r.spec.e, kind)).or_default();
        }
        for v in r.violations() {
            *violations.entry((r.spec.e, v)).or_default() += 1;
        }
    }
    for (&e, &n) in &checked {
        let bad = mismatched.get(&e).copied().unwrap_or(0);
        c.line(
            bad == 0,
            &format!("e={e} theorem = oracle: {bad} of {n} codes differ"),
        )?;
        for (&(_, kind), &count) in violations.range((e, "")..(e + 1, "")) {
            c.line(
                count == 0,
                &format!("e={e} {kind}: {count} of {n} codes violate"),
            )?;
        }
    }
    let failed = c.failed;
    writeln!(c.out, "{failed} checks failed")?;
    Ok(Outcome::from_clean(failed == 0))
}
