use std::process::ExitCode;

use clap::Parser;

use linktopo::cli::{run, Cli};

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("linktopo: {e}");
            ExitCode::FAILURE
        }
    }
}
