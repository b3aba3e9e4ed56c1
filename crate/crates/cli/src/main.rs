use std::fs;
use std::process::ExitCode;

use clap::Parser;
use idealprox_cli::args::Cli;
use idealprox_cli::{commands, CliError};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let output = commands::output_of(&cli.command);
    let text = match commands::run(&cli.command) {
        Ok(r) => commands::pick(r, output.format),
        Err(CliError::Domain(e)) => {
            print!("{}", commands::error_json(&e));
            return ExitCode::from(2);
        }
        Err(e) => {
            eprintln!("idealprox: {e}");
            return ExitCode::from(1);
        }
    };
    match &output.out {
        Some(path) => {
            if let Err(e) = fs::write(path, text) {
                eprintln!("idealprox: i/o error: {}: {e}", path.display());
                return ExitCode::from(1);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::SUCCESS
}
