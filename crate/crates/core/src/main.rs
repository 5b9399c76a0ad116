use std::process::ExitCode;

use clap::Parser;
use suzuki_semigroups::cli::{run, Cli, CliConfig};

fn main() -> ExitCode {
    let config: CliConfig = Cli::parse().into();
    let outcome = run(&config);
    let written = match &config.output {
        Some(path) => std::fs::write(path, &outcome.text),
        None => {
            print!("{}", outcome.text);
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(1);
    }
    ExitCode::from(outcome.status as u8)
}
