use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("field degree e = {e} outside supported range {min}..={max}")]
    DegreeOutOfRange { e: u32, min: u32, max: u32 },

    #[error("modulus {modulus:#x} does not have degree {e}")]
    ModulusDegree { e: u32, modulus: u64 },

    #[error("modulus {modulus:#x} is reducible: {test} fails{}", fmt_factor(*.factor))]
    ReducibleModulus {
        modulus: u64,
        test: String,
        factor: Option<u64>,
    },

    #[error("division by zero in GF(2^{e})")]
    DivisionByZero { e: u32 },

    #[error("value {bits:#x} is not an element of GF(2^{e})")]
    NotInField { bits: u64, e: u32 },

    #[error("subfield degree t = {t} does not divide e = {e}")]
    NotADivisor { e: u32, t: u32 },

    #[error("{what} must be nonzero")]
    ZeroArgument { what: &'static str },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("cannot parse element {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("{operation} refused for e = {e} (limit {limit}): about {estimate:.3e} basic steps")]
    CostRefused {
        operation: &'static str,
        e: u32,
        limit: u32,
        estimate: f64,
    },

    #[error("invariant violated: {0}")]
    Invariant(String),
}

fn fmt_factor(factor: Option<u64>) -> String {
    match factor {
        Some(f) => format!(" (nontrivial factor {f:#x})"),
        None => String::new(),
    }
}

pub type Result<T> = std::result::Result<T, Error>;
