use std::process::ExitCode;

use clap::Parser;
use fddof_cli::{exit_code, run, Cli, CliError};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return if err.use_stderr() {
                ExitCode::from(CliError::Usage(String::new()).exit_code())
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = run(&cli);
    match &result {
        Ok(outcome) => print!("{}", outcome.report),
        Err(err) => eprintln!("error: {err}"),
    }
    ExitCode::from(exit_code(&result))
}
