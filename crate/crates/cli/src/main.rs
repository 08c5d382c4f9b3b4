use std::process::ExitCode;

use clap::Parser;
use fibcat_cli::args::Command;
use fibcat_cli::{run, summary, Cli, EXIT_ERROR};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli);
    let mut code = result.code;
    match (&cli.dot, &result.dot) {
        (Some(path), Some(text)) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("cannot write {}: {e}", path.display());
                code = EXIT_ERROR;
            }
        }
        (None, Some(text)) if matches!(cli.command, Command::Dot { .. }) && !cli.json => {
            print!("{text}");
            return ExitCode::from(code as u8);
        }
        _ => {}
    }
    if cli.json {
        println!("{}", serde_json::to_string_pretty(&result.report).expect("report serializes"));
    } else {
        print!("{}", summary(&result.report));
    }
    ExitCode::from(code as u8)
}
