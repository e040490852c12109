//! Command-line frontend: argument grammar, dispatch and CSV/JSON output.

pub mod args;
pub mod commands;
pub mod error;
pub mod parse;
pub mod table;
pub mod verify;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};

use clap::error::ErrorKind;
use clap::Parser;

use crate::args::{Cli, Command};
use crate::error::{CliError, EXIT_OK, EXIT_USAGE};
use crate::table::Table;

pub const DEFAULT_PRECISION: usize = 12;
pub const PRECISION_ENV: &str = "BSV_PRECISION";

fn precision(cli: &Cli) -> Result<usize, CliError> {
    if let Some(p) = cli.precision {
        return Ok(p);
    }
    match std::env::var(PRECISION_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{PRECISION_ENV} must be a non-negative integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_PRECISION),
    }
}

fn emit(cli: &Cli, table: &Table, precision: usize) -> Result<(), CliError> {
    match &cli.output {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            table.write(&mut w, cli.format, precision)?;
            w.flush()?;
        }
        None => {
            let stdout = io::stdout();
            let mut w = BufWriter::new(stdout.lock());
            table.write(&mut w, cli.format, precision)?;
            w.flush()?;
        }
    }
    Ok(())
}

fn execute(cli: &Cli) -> Result<(), CliError> {
    let precision = precision(cli)?;
    let table = match &cli.command {
        Command::Kappa(a) => commands::kappa(a)?,
        Command::Eval(a) => commands::eval(a)?,
        Command::Spectrum(a) => commands::spectrum(a)?,
        Command::Selberg(a) => commands::selberg(a)?,
        Command::RhoScan(a) => commands::rho(a)?,
        Command::Threshold => commands::threshold(),
        Command::Trig(a) => commands::trig(a)?,
        Command::Debranges(a) => commands::debranges(a)?,
        Command::Verify(a) => {
            let checks = verify::run_suite(a.suite)?;
            emit(cli, &verify::table(&checks), precision)?;
            let failed = checks.iter().filter(|c| !c.passed()).count();
            if failed > 0 {
                return Err(CliError::Verification { failed, total: checks.len() });
            }
            return Ok(());
        }
    };
    emit(cli, &table, precision)
}

fn report(err: &CliError, as_json: bool) {
    if as_json {
        eprintln!("{}", err.to_json());
    } else {
        eprintln!("error: {err}");
    }
}

/// Parse `args` (including the program name), run the subcommand and return
/// the process exit code: 0 success, 1 verification or i/o failure, 2 usage
/// error, 3 domain error.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let error_json = args.iter().any(|a| a == "--error-json");
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = e.print();
                    EXIT_OK
                }
                _ if error_json => {
                    let msg = e.render().to_string();
                    report(&CliError::Usage(msg.trim().to_owned()), true);
                    EXIT_USAGE
                }
                _ => {
                    let _ = e.print();
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(&cli) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            report(&e, cli.error_json);
            e.exit_code()
        }
    }
}
