use std::process::ExitCode;

use clap::Parser;

use rackhom_cli::{render, run, Budget, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = Budget::from_env().and_then(|b| run(&cli, &b));
    match outcome {
        Ok(report) => {
            print!("{}", render(&report, cli.format));
            if report.failed() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("rackhom: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}
