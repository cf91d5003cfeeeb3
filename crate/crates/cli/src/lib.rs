//! Command-line front end: argument parsing, record schemas and the four
//! subcommands. [`run`] returns the process exit code.

pub mod args;
pub mod commands;
pub mod engine;
pub mod error;
pub mod records;

use std::ffi::OsString;

use clap::error::ErrorKind;
use clap::Parser;
use orbkin_core::Exec;

use args::{Cli, Command};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DATA: i32 = 2;

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
        }
    };
    let exec = Exec::default();
    let result = match &cli.command {
        Command::Compute(a) => commands::compute(a),
        Command::Series(a) => commands::series(a, exec),
        Command::Tables(a) => commands::tables(a, exec),
        Command::Compare(a) => commands::compare(a, exec),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_DATA
        }
    }
}
