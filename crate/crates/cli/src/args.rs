use std::ops::RangeInclusive;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "threeweight",
    version,
    about = "Binary Weil sums and three-weight defining-set codes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate S_alpha(a, b) in closed form.
    Sum(SumArgs),
    /// Weight distribution of the code defined by (e, h, a, b).
    Code(CodeArgs),
    /// Check every instance in a range of fields.
    Sweep(SweepArgs),
    /// Reproduce the reference values and run the structural checks.
    Verify(VerifyArgs),
    /// Parameters where the superseded evaluation disagrees with the true sum.
    Counterexample(CounterexampleArgs),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// One JSON object per line.
    Json,
    Csv,
    #[default]
    Pretty,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SweepKind {
    Sum,
    Code,
    Legacy,
}

#[derive(Args, Debug)]
pub struct FieldArgs {
    /// Extension degree e of GF(2^e).
    #[arg(long)]
    pub e: u32,
    /// Defining polynomial as hex bits, e.g. 0x5b for x^6+x^4+x^3+x+1.
    #[arg(long, value_parser = parse_hex)]
    pub modulus: Option<u64>,
}

#[derive(Args, Debug)]
pub struct SumArgs {
    #[command(flatten)]
    pub field: FieldArgs,
    #[arg(long)]
    pub alpha: u32,
    /// Hex bits or g^k.
    #[arg(long, allow_hyphen_values = true)]
    pub a: String,
    #[arg(long, allow_hyphen_values = true)]
    pub b: String,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    /// Fall back to the exhaustive sum when the closed form leaves the sign open.
    #[arg(long)]
    pub resolve_signs: bool,
    /// Always compute the exhaustive sum and compare.
    #[arg(long)]
    pub paranoid: bool,
}

#[derive(Args, Debug)]
pub struct CodeArgs {
    #[command(flatten)]
    pub field: FieldArgs,
    #[arg(long)]
    pub h: u32,
    #[arg(long, allow_hyphen_values = true)]
    pub a: String,
    #[arg(long, allow_hyphen_values = true)]
    pub b: String,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    /// Also count every codeword weight by scanning the defining set.
    #[arg(long)]
    pub paranoid: bool,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    #[arg(long, value_enum)]
    pub kind: SweepKind,
    /// Degrees to cover: "6", "4..6" or "4..=6" (both inclusive).
    #[arg(long, value_parser = parse_range, default_value = "4..6")]
    pub e: RangeInclusive<u32>,
    /// Only this h (code sweeps).
    #[arg(long)]
    pub h: Option<u32>,
    /// Only this alpha (sum and legacy sweeps).
    #[arg(long)]
    pub alpha: Option<u32>,
    /// Modulus to use; only valid when the range holds a single degree.
    #[arg(long, value_parser = parse_hex, conflicts_with = "alternate")]
    pub modulus: Option<u64>,
    /// Use the alternate modulus table.
    #[arg(long)]
    pub alternate: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Scan the defining set for every message instead of factored counting.
    #[arg(long)]
    pub paranoid: bool,
    /// Worker threads; output order does not depend on it.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    pub jobs: u32,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Degrees for the theorem/oracle and structural checks.
    #[arg(long, value_parser = parse_range, default_value = "4..6")]
    pub e: RangeInclusive<u32>,
    #[arg(long)]
    pub alternate: bool,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    pub jobs: u32,
}

#[derive(Args, Debug)]
pub struct CounterexampleArgs {
    #[command(flatten)]
    pub field: FieldArgs,
    #[arg(long)]
    pub alpha: u32,
    /// How many to print.
    #[arg(long, default_value_t = 5)]
    pub count: usize,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

pub fn parse_hex(s: &str) -> Result<u64, String> {
    let digits = s
        .strip_prefix("0x")
        .or_else(|| s.strip_prefix("0X"))
        .unwrap_or(s);
    u64::from_str_radix(digits, 16).map_err(|_| format!("{s:?} is not a hexadecimal number"))
}

pub fn parse_range(s: &str) -> Result<RangeInclusive<u32>, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<u32>()
            .map_err(|_| format!("{t:?} is not a degree"))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (num(lo)?, num(hi.strip_prefix('=').unwrap_or(hi))?),
        None => {
            let e = num(s)?;
            (e, e)
        }
    };
    if lo > hi {
        return Err(format!("empty range {s:?}"));
    }
    Ok(lo..=hi)
}
