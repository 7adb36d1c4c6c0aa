use std::process::ExitCode;

use clap::Parser;
use supertensor_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let rendered = outcome.report.render(cli.format);
    match &outcome.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &rendered) {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(2);
            }
            println!("wrote {} records to {}, mismatches: {}", outcome.report.records().len(), path.display(), outcome.report.mismatches());
        }
        None => print!("{rendered}"),
    }
    ExitCode::from(outcome.exit_code())
}
