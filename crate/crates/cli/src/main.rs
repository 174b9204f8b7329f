use std::process::ExitCode;

use clap::Parser;
use foldcube_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        // clap exits with 2 on usage errors and 0 for --help / --version
        Err(e) => e.exit(),
    };
    let outcome = run(&cli);
    print!("{}", outcome.json());
    eprintln!("{}", outcome.summary);
    ExitCode::from(outcome.code as u8)
}
