use std::fmt;
use std::io;

use threeweight::{Error, Field};

use crate::args::FieldArgs;

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_MISMATCH: u8 = 2;
pub const EXIT_COST: u8 = 3;

/// Verification result of a command that ran to completion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Ok,
    Mismatch,
}

impl Outcome {
    pub fn from_clean(clean: bool) -> Self {
        if clean {
            Outcome::Ok
        } else {
            Outcome::Mismatch
        }
    }

    pub fn code(self) -> u8 {
        match self {
            Outcome::Ok => EXIT_OK,
            Outcome::Mismatch => EXIT_MISMATCH,
        }
    }
}

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    message: String,
    broken_pipe: bool,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_USAGE,
            message: message.into(),
            broken_pipe: false,
        }
    }

    pub fn is_broken_pipe(&self) -> bool {
        self.broken_pipe
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::CostRefused { .. } => EXIT_COST,
            Error::Invariant(_) => EXIT_MISMATCH,
            _ => EXIT_USAGE,
        };
        CliError {
            code,
            message: e.to_string(),
            broken_pipe: false,
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError {
            code: EXIT_USAGE,
            broken_pipe: e.kind() == io::ErrorKind::BrokenPipe,
            message: format!("writing output: {e}"),
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::from(io::Error::from(e))
    }
}

pub fn field(args: &FieldArgs) -> Result<Field, CliError> {
    Ok(Field::from_parts(args.e, args.modulus)?)
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
