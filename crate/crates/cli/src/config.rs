//! Command-line and config-file parsing.
//!
//! Precedence: flags, then the TOML file given by `--config`, then built-in
//! defaults.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use moba_core::problems::DEFAULT_PENALTY;
use moba_core::{problem_by_name, BatParams, Problem};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub const DEFAULT_POINTS: usize = 50;
pub const DEFAULT_RESTARTS: usize = 1;
pub const DEFAULT_TRACE_STRIDE: usize = 10;

#[derive(Debug, Parser)]
#[command(name = "moba", version, about = "Multiobjective bat algorithm benchmark runner")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
#[allow(clippy::large_enum_variant)]
pub enum Command {
    /// Run an experiment and write front, trace and summary files.
    Run(RunArgs),
    /// List the available problems.
    Problems,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NormalizeMode {
    /// Use the problem's preference.
    Auto,
    On,
    Off,
}

#[derive(Debug, Default, Args)]
pub struct RunArgs {
    /// Problem name (zdt1, zdt2, zdt3, lz4, welded-beam).
    #[arg(long)]
    pub problem: Option<String>,
    /// Weight-runs (Pareto points) per restart.
    #[arg(long)]
    pub points: Option<usize>,
    #[arg(long)]
    pub restarts: Option<usize>,
    /// Bat population size.
    #[arg(long)]
    pub pop: Option<usize>,
    /// Iterations per weight-run.
    #[arg(long)]
    pub iters: Option<usize>,
    #[arg(long)]
    pub alpha: Option<f64>,
    #[arg(long)]
    pub gamma: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub fmin: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub fmax: Option<f64>,
    #[arg(long)]
    pub penalty: Option<f64>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Decision-space dimension override.
    #[arg(long)]
    pub dim: Option<usize>,
    #[arg(long)]
    pub out_front: Option<PathBuf>,
    #[arg(long)]
    pub out_trace: Option<PathBuf>,
    #[arg(long)]
    pub out_summary: Option<PathBuf>,
    /// TOML file with any of the above keys (dashes as underscores).
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Write every k-th iteration to the trace file.
    #[arg(long)]
    pub trace_stride: Option<usize>,
    /// Scalarize anchor-normalized objectives.
    #[arg(long, value_enum)]
    pub normalize: Option<NormalizeMode>,
    /// Worker threads (default: all cores). Does not affect results.
    #[arg(long)]
    pub threads: Option<usize>,
    /// Store the measured wall time in the summary file.
    #[arg(long)]
    pub record_time: bool,
}

/// Keys accepted in a `--config` file.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub problem: Option<String>,
    pub points: Option<usize>,
    pub restarts: Option<usize>,
    pub pop: Option<usize>,
    pub iters: Option<usize>,
    pub alpha: Option<f64>,
    pub gamma: Option<f64>,
    pub fmin: Option<f64>,
    pub fmax: Option<f64>,
    pub penalty: Option<f64>,
    pub seed: Option<u64>,
    pub dim: Option<usize>,
    pub out_front: Option<PathBuf>,
    pub out_trace: Option<PathBuf>,
    pub out_summary: Option<PathBuf>,
    pub trace_stride: Option<usize>,
    pub normalize: Option<NormalizeMode>,
    pub threads: Option<usize>,
    pub record_time: Option<bool>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        toml::from_str(&text).map_err(|e| CliError::ConfigFile {
            path: path.to_path_buf(),
            message: e.message().to_string(),
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub problem: String,
    pub dim: Option<usize>,
    pub params: BatParams,
    pub points: usize,
    pub restarts: usize,
    pub penalty: f64,
    pub normalize: NormalizeMode,
    pub trace_stride: usize,
    pub threads: Option<usize>,
    pub record_time: bool,
    pub out_front: PathBuf,
    pub out_trace: PathBuf,
    pub out_summary: PathBuf,
}

impl RunConfig {
    /// Defaults for `problem`; output files go to the working directory.
    pub fn new(problem: &str) -> Self {
        RunConfig {
            problem: problem.to_string(),
            dim: None,
            params: BatParams::default(),
            points: DEFAULT_POINTS,
            restarts: DEFAULT_RESTARTS,
            penalty: DEFAULT_PENALTY,
            normalize: NormalizeMode::Auto,
            trace_stride: DEFAULT_TRACE_STRIDE,
            threads: None,
            record_time: false,
            out_front: PathBuf::from("front.csv"),
            out_trace: PathBuf::from("trace.csv"),
            out_summary: PathBuf::from("summary.json"),
        }
    }

    /// Layers flags over the optional config file over the defaults and
    /// validates the result.
    pub fn from_args(args: &RunArgs) -> Result<Self, CliError> {
        let file = match &args.config {
            Some(path) => FileConfig::load(path)?,
            None => FileConfig::default(),
        };
        let problem = args
            .problem
            .clone()
            .or(file.problem)
            .ok_or_else(|| CliError::Usage("--problem is required".into()))?;
        let mut cfg = RunConfig::new(&problem);
        let p = &mut cfg.params;

        macro_rules! layer {
            ($dst:expr, $key:ident) => {
                if let Some(v) = args.$key.clone().or(file.$key) {
                    $dst = v;
                }
            };
        }
        layer!(p.population_size, pop);
        layer!(p.max_iterations, iters);
        layer!(p.alpha, alpha);
        layer!(p.gamma, gamma);
        layer!(p.f_min, fmin);
        layer!(p.f_max, fmax);
        layer!(p.seed, seed);
        layer!(cfg.points, points);
        layer!(cfg.restarts, restarts);
        layer!(cfg.penalty, penalty);
        layer!(cfg.trace_stride, trace_stride);
        layer!(cfg.normalize, normalize);
        layer!(cfg.out_front, out_front);
        layer!(cfg.out_trace, out_trace);
        layer!(cfg.out_summary, out_summary);
        cfg.dim = args.dim.or(file.dim);
        cfg.threads = args.threads.or(file.threads);
        cfg.record_time = args.record_time || file.record_time.unwrap_or(false);

        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), CliError> {
        self.params.validate()?;
        self.build_problem()?;
        if self.points == 0 {
            return Err(CliError::Usage("--points must be at least 1".into()));
        }
        if self.restarts == 0 {
            return Err(CliError::Usage("--restarts must be at least 1".into()));
        }
        if self.trace_stride == 0 {
            return Err(CliError::Usage("--trace-stride must be at least 1".into()));
        }
        if self.threads == Some(0) {
            return Err(CliError::Usage("--threads must be at least 1".into()));
        }
        if !(self.penalty >= 0.0 && self.penalty.is_finite()) {
            return Err(CliError::Usage("--penalty must be finite and nonnegative".into()));
        }
        Ok(())
    }

    pub fn build_problem(&self) -> Result<Box<dyn Problem>, CliError> {
        Ok(problem_by_name(&self.problem, self.dim)?)
    }

    pub fn normalize_for(&self, problem: &dyn Problem) -> bool {
        match self.normalize {
            NormalizeMode::Auto => problem.normalize_by_default(),
            NormalizeMode::On => true,
            NormalizeMode::Off => false,
        }
    }
}

/// Parses a full argument vector (program name first).
pub fn parse_cli<I, T>(argv: I) -> Result<Cli, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    Cli::try_parse_from(argv)
}

/// Parses `moba run ...` into a validated [`RunConfig`].
pub fn parse_config<I, T>(argv: I) -> Result<RunConfig, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match parse_cli(argv).map_err(|e| CliError::Usage(e.to_string()))?.command {
        Command::Run(args) => RunConfig::from_args(&args),
        Command::Problems => Err(CliError::Usage("expected the `run` subcommand".into())),
    }
}
