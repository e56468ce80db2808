use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use eulerian_cli::{run, Cli, CliError, EXIT_USAGE};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let outcome = run(&cli).and_then(|outcome| {
        match &cli.common.out {
            Some(path) => std::fs::write(path, &outcome.text).map_err(|source| CliError::Io {
                path: path.clone(),
                source,
            })?,
            None => {
                let mut stdout = std::io::stdout().lock();
                // Write errors on a closed stdout are ignored.
                let _ = stdout.write_all(outcome.text.as_bytes());
            }
        }
        Ok(outcome.code)
    });
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
