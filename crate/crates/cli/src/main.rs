mod args;
mod commands;
mod output;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command};
use output::{CliError, Outcome};

fn run(cli: Cli, out: &mut dyn Write) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Sum(a) => commands::sum(&a, out),
        Command::Code(a) => commands::code(&a, out),
        Command::Sweep(a) => commands::sweep(&a, out),
        Command::Verify(a) => commands::verify(&a, out),
        Command::Counterexample(a) => commands::counterexample(&a, out),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(output::EXIT_USAGE),
            };
        }
    };
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = run(cli, &mut out);
    let flushed = out.flush();
    match result.and_then(|o| flushed.map(|_| o).map_err(CliError::from)) {
        Ok(outcome) => ExitCode::from(outcome.code()),
        Err(e) if e.is_broken_pipe() => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            if e.code == output::EXIT_USAGE {
                eprintln!("\nFor more information, try '--help'.");
            }
            ExitCode::from(e.code)
        }
    }
}
