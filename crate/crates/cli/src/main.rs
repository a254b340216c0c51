use std::process::ExitCode;

use clap::Parser;
use qchromatic_cli::{main_with, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    ExitCode::from(main_with(
        &cli,
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    ))
}
