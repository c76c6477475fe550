use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use gainspec::cli::{run, Cli, TOLERANCE_ENV};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let env = std::env::var(TOLERANCE_ENV).ok();
    match run(&cli, env.as_deref()) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("gainspec: {e}");
            ExitCode::from(2)
        }
    }
}
