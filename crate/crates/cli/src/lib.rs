//! Benchmark runner for the multiobjective bat algorithm: configuration,
//! parallel execution of restarts and weight-runs, and the front, trace and
//! summary file formats.

pub mod config;
pub mod error;
pub mod output;
pub mod runner;

use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::error::ErrorKind;

pub use config::{parse_config, Cli, Command, NormalizeMode, RunArgs, RunConfig};
pub use error::CliError;
pub use output::{format_sig12, Summary};
pub use runner::{execute, Experiment};

/// Runs a validated configuration end to end and returns the summary line.
pub fn run(cfg: &RunConfig) -> Result<String, CliError> {
    let start = Instant::now();
    let exp = execute(cfg)?;
    let elapsed = start.elapsed().as_secs_f64();
    let summary = Summary::new(cfg, &exp, cfg.record_time.then_some(elapsed));
    output::write_outputs(cfg, &exp, &summary)?;
    Ok(output::summary_line(&summary, exp.total_points(), elapsed))
}

/// Entry point shared by the binary and the tests; returns the exit code.
pub fn main_with_args<'a, I, T>(argv: I, stdout: &'a mut dyn Write, stderr: &'a mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match config::parse_cli(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let out = if code == 0 { stdout } else { stderr };
            let _ = write!(out, "{e}");
            return code;
        }
    };
    let result = match cli.command {
        Command::Problems => {
            for name in moba_core::PROBLEM_NAMES {
                let _ = writeln!(stdout, "{name}");
            }
            return 0;
        }
        Command::Run(args) => RunConfig::from_args(&args).and_then(|cfg| run(&cfg)),
    };
    match result {
        Ok(line) => {
            let _ = writeln!(stdout, "{line}");
            0
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
