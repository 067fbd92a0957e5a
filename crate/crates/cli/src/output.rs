//! Front CSV, trace CSV and summary JSON writers.

use std::collections::HashMap;
use std::path::Path;

use moba_core::pareto::ArchiveEntry;
use moba_core::ParetoArchive;
use serde::Serialize;

use crate::config::RunConfig;
use crate::error::CliError;
use crate::runner::Experiment;

/// Number of significant digits in front files.
pub const SIGNIFICANT_DIGITS: usize = 12;

/// Plain decimal notation with 12 significant digits, e.g. `0.000123456789012`
/// or `1234567.89012`. Non-finite values print as `NaN`, `inf` or `-inf`.
pub fn format_sig12(v: f64) -> String {
    if !v.is_finite() {
        return format!("{v}");
    }
    let sci = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, v);
    let (mantissa, exp) = sci.split_once('e').expect("scientific notation");
    let exp: i32 = exp.parse().expect("integer exponent");
    let negative = mantissa.starts_with('-');
    let digits: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    let all_zero = digits.bytes().all(|b| b == b'0');

    let mut out = String::with_capacity(SIGNIFICANT_DIGITS + 8);
    if negative && !all_zero {
        out.push('-');
    }
    if exp < 0 {
        out.push_str("0.");
        out.extend(std::iter::repeat_n('0', (-exp - 1) as usize));
        out.push_str(&digits);
    } else {
        let int_len = exp as usize + 1;
        if int_len >= digits.len() {
            out.push_str(&digits);
            out.extend(std::iter::repeat_n('0', int_len - digits.len()));
        } else {
            out.push_str(&digits[..int_len]);
            out.push('.');
            out.push_str(&digits[int_len..]);
        }
    }
    out
}

/// Scientific notation with 12 significant digits, used in trace files.
pub fn format_sci12(v: f64) -> String {
    format!("{:.*e}", SIGNIFICANT_DIGITS - 1, v)
}

fn csv_writer() -> csv::Writer<Vec<u8>> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new())
}

fn finish(wtr: csv::Writer<Vec<u8>>, path: &Path) -> Result<Vec<u8>, CliError> {
    wtr.into_inner()
        .map_err(|e| CliError::io(path, std::io::Error::other(e.to_string())))
}

fn csv_err(path: &Path) -> impl Fn(csv::Error) -> CliError + '_ {
    move |e| CliError::io(path, std::io::Error::other(e.to_string()))
}

/// Archive entries sorted ascending by `f1`, ties by the remaining objectives.
pub fn sorted_entries(archive: &ParetoArchive) -> Vec<&ArchiveEntry> {
    let mut rows: Vec<&ArchiveEntry> = archive.entries().iter().collect();
    rows.sort_by(|a, b| {
        a.objectives
            .iter()
            .zip(b.objectives.iter())
            .map(|(x, y)| x.total_cmp(y))
            .find(|o| o.is_ne())
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    rows
}

/// Header `f1,..,fK,x1,..,xd` followed by one row per archive entry.
pub fn front_csv(archive: &ParetoArchive, num_objectives: usize, dim: usize) -> Result<Vec<u8>, CliError> {
    let path = Path::new("front");
    let mut wtr = csv_writer();
    let header: Vec<String> = (1..=num_objectives)
        .map(|k| format!("f{k}"))
        .chain((1..=dim).map(|i| format!("x{i}")))
        .collect();
    wtr.write_record(&header).map_err(csv_err(path))?;
    for e in sorted_entries(archive) {
        let row: Vec<String> = e
            .objectives
            .iter()
            .chain(e.decision.iter())
            .map(|&v| format_sig12(v))
            .collect();
        wtr.write_record(&row).map_err(csv_err(path))?;
    }
    finish(wtr, path)
}

/// Header `run,iteration,best_scalar,front_error`; every `stride`-th
/// iteration plus the last one of each run. `run` is `restart * points + index`.
pub fn trace_csv(exp: &Experiment, points: usize, stride: usize) -> Result<Vec<u8>, CliError> {
    let path = Path::new("trace");
    let errors: HashMap<usize, f64> = exp
        .front_error_trace
        .iter()
        .filter_map(|(it, e)| e.as_ref().map(|e| (*it, e.raw)))
        .collect();
    let mut wtr = csv_writer();
    wtr.write_record(["run", "iteration", "best_scalar", "front_error"])
        .map_err(csv_err(path))?;
    for run in &exp.runs {
        let id = (run.restart as usize * points + run.index).to_string();
        let records = run.trace.records();
        let last = records.last().map_or(0, |r| r.iteration);
        for rec in records {
            if rec.iteration % stride != 0 && rec.iteration != last {
                continue;
            }
            let fe = errors.get(&rec.iteration).map(|&v| format_sci12(v)).unwrap_or_default();
            wtr.write_record([
                id.as_str(),
                &rec.iteration.to_string(),
                &format_sci12(rec.best_scalar),
                &fe,
            ])
            .map_err(csv_err(path))?;
        }
    }
    finish(wtr, path)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConfigRecord {
    pub problem: String,
    pub dim: usize,
    pub points: usize,
    pub restarts: usize,
    pub pop: usize,
    pub iters: usize,
    pub alpha: f64,
    pub gamma: f64,
    pub fmin: f64,
    pub fmax: f64,
    pub loudness_init: [f64; 2],
    pub rate_init: [f64; 2],
    pub penalty: f64,
    pub seed: u64,
    pub normalize: bool,
    pub trace_stride: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Summary {
    pub problem: String,
    pub config: ConfigRecord,
    pub archive_size: usize,
    pub front_error_raw: Option<f64>,
    pub front_error_per_point: Option<f64>,
    pub wall_seconds: Option<f64>,
    pub infeasible_discards: usize,
}

impl Summary {
    pub fn new(cfg: &RunConfig, exp: &Experiment, wall_seconds: Option<f64>) -> Self {
        let p = &cfg.params;
        Summary {
            problem: cfg.problem.clone(),
            config: ConfigRecord {
                problem: cfg.problem.clone(),
                dim: exp.problem.dimension(),
                points: cfg.points,
                restarts: cfg.restarts,
                pop: p.population_size,
                iters: p.max_iterations,
                alpha: p.alpha,
                gamma: p.gamma,
                fmin: p.f_min,
                fmax: p.f_max,
                loudness_init: [p.loudness_init.0, p.loudness_init.1],
                rate_init: [p.rate_init.0, p.rate_init.1],
                penalty: cfg.penalty,
                seed: p.seed,
                normalize: exp.normalize,
                trace_stride: cfg.trace_stride,
            },
            archive_size: exp.archive.len(),
            front_error_raw: exp.front_error.map(|e| e.raw),
            front_error_per_point: exp.front_error.map(|e| e.per_point),
            wall_seconds,
            infeasible_discards: exp.infeasible_discards,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("summary serializes");
        s.push('\n');
        s
    }
}

/// `zdt1: 200 points, archive 143, E_f 8.73e-5 (per point 6.11e-7), 12.31 s`
pub fn summary_line(summary: &Summary, total_points: usize, wall_seconds: f64) -> String {
    let ef = match (summary.front_error_raw, summary.front_error_per_point) {
        (Some(raw), Some(pp)) => format!("E_f {raw:.3e} (per point {pp:.3e})"),
        _ => "E_f n/a".to_string(),
    };
    format!(
        "{}: {} points, archive {}, {}, {:.2} s",
        summary.problem, total_points, summary.archive_size, ef, wall_seconds
    )
}

pub fn write_file(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    std::fs::write(path, bytes).map_err(|e| CliError::io(path, e))
}

/// Writes the three output files of a finished experiment.
pub fn write_outputs(cfg: &RunConfig, exp: &Experiment, summary: &Summary) -> Result<(), CliError> {
    let k = exp.problem.num_objectives();
    let front = front_csv(&exp.archive, k, exp.problem.dimension())?;
    let trace = trace_csv(exp, cfg.points, cfg.trace_stride)?;
    write_file(&cfg.out_front, &front)?;
    write_file(&cfg.out_trace, &trace)?;
    write_file(&cfg.out_summary, summary.to_json().as_bytes())
}
