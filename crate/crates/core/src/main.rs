use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use laurent_cf::cli::{run_to_sink, RunConfig, EXIT_USAGE};

fn main() -> ExitCode {
    let cfg = match RunConfig::try_parse() {
        Ok(cfg) => cfg,
        Err(e) => {
            let _ = e.print();
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            return ExitCode::from(code as u8);
        }
    };
    match run_to_sink(&cfg) {
        Ok((stdout, code)) => {
            let mut handle = std::io::stdout().lock();
            let _ = handle.write_all(stdout.as_bytes());
            let _ = handle.flush();
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
