mod args;
mod commands;
mod highlight;

use std::process::ExitCode;

use clap::Parser;

use args::Cli;

pub const EXIT_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_BUDGET: u8 = 4;
/// Malformed or foreign input data (sysexits `EX_DATAERR`).
pub const EXIT_DATA: u8 = 65;

/// Input data that cannot be used: unreadable code files, foreign words.
#[derive(Debug)]
pub struct DataError(pub String);

impl std::fmt::Display for DataError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for DataError {}

fn exit_code_for(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<DataError>().is_some() {
        return EXIT_DATA;
    }
    match err.downcast_ref::<perfcode::Error>() {
        Some(perfcode::Error::InvalidInput(_) | perfcode::Error::InvalidParameter(_)) => EXIT_USAGE,
        Some(
            perfcode::Error::NotInGraph(_)
            | perfcode::Error::Parse(_)
            | perfcode::Error::LengthMismatch { .. },
        ) => EXIT_DATA,
        Some(perfcode::Error::ResourceLimit { .. }) => EXIT_BUDGET,
        _ => EXIT_FAILED,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}
