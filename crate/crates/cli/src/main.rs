use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use lcn_cli::{run, RunConfig, EXIT_USAGE};

fn main() -> ExitCode {
    let config = RunConfig::parse();
    let (artifact, timing) = match run(&config) {
        Ok(out) => out,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    if let Some(t) = timing {
        eprintln!("{t}");
    }
    let written = match &config.command.common().output {
        Some(path) => std::fs::write(path, &artifact.body).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => std::io::stdout().lock().write_all(artifact.body.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(EXIT_USAGE);
    }
    ExitCode::from(artifact.code)
}
