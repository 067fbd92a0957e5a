//! Parallel execution of restarts and weight-runs.
//!
//! Every weight-run owns a stream derived from `(seed, restart, index)`, and
//! results are collected in `(restart, index)` order before any archive
//! insertion, so the outcome does not depend on the thread count.

use moba_core::metrics::front_error;
use moba_core::moba::{collect_archive, front_error_trace, run_anchor, run_weight};
use moba_core::pareto::merge_archives;
use moba_core::{
    FrontError, MobaOptions, ObjectiveScaling, ParetoArchive, Problem, TrueFront, WeightRun,
};
use rayon::prelude::*;

use crate::config::RunConfig;
use crate::error::CliError;

pub struct Experiment {
    pub problem: Box<dyn Problem>,
    pub true_front: Option<TrueFront>,
    pub normalize: bool,
    /// Scaling used by each restart, when normalization is on.
    pub scalings: Vec<Option<ObjectiveScaling>>,
    /// All weight-runs, ordered by restart then index.
    pub runs: Vec<WeightRun>,
    pub archive: ParetoArchive,
    pub infeasible_discards: usize,
    /// E_f of the merged archive; `None` without a true front or with an empty archive.
    pub front_error: Option<FrontError>,
    /// E_f of the merged snapshots at every trace iteration.
    pub front_error_trace: Vec<(usize, Option<FrontError>)>,
}

impl Experiment {
    pub fn total_points(&self) -> usize {
        self.runs.len()
    }
}

fn options(cfg: &RunConfig, restart: usize, normalize: bool, with_front: bool) -> MobaOptions {
    MobaOptions {
        n_points: cfg.points,
        penalty: cfg.penalty,
        restart: restart as u64,
        snapshot_every: with_front.then_some(cfg.trace_stride),
        normalize,
        scaling: None,
    }
}

/// Runs the whole experiment on a pool of `cfg.threads` workers.
pub fn execute(cfg: &RunConfig) -> Result<Experiment, CliError> {
    cfg.validate()?;
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cfg.threads {
        builder = builder.num_threads(n);
    }
    let pool = builder
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start worker pool: {e}")))?;
    pool.install(|| execute_in_pool(cfg))
}

fn execute_in_pool(cfg: &RunConfig) -> Result<Experiment, CliError> {
    let problem = cfg.build_problem()?;
    let p = &cfg.params;
    let true_front = problem.true_front();
    let normalize = cfg.normalize_for(problem.as_ref());
    let k = problem.num_objectives();

    let mut opts: Vec<MobaOptions> = (0..cfg.restarts)
        .map(|r| options(cfg, r, normalize, true_front.is_some()))
        .collect();

    let scalings: Vec<Option<ObjectiveScaling>> = if normalize {
        let anchors = (0..cfg.restarts * k)
            .into_par_iter()
            .map(|i| run_anchor(problem.as_ref(), p, &opts[i / k], i % k))
            .collect::<Result<Vec<_>, _>>()?;
        anchors
            .chunks(k)
            .map(|a| ObjectiveScaling::from_anchors(a).map(Some))
            .collect::<Result<Vec<_>, _>>()?
    } else {
        vec![None; cfg.restarts]
    };
    for (o, s) in opts.iter_mut().zip(&scalings) {
        o.scaling = s.clone();
    }

    let n = cfg.points;
    let runs = (0..cfg.restarts * n)
        .into_par_iter()
        .map(|i| run_weight(problem.as_ref(), p, &opts[i / n], i % n))
        .collect::<Result<Vec<_>, _>>()?;

    let mut archives = Vec::with_capacity(cfg.restarts);
    let mut infeasible_discards = 0;
    for chunk in runs.chunks(n) {
        let (archive, discards) = collect_archive(chunk)?;
        archives.push(archive);
        infeasible_discards += discards;
    }
    let archive = merge_archives(&archives)?;

    let (front_error, front_error_trace) = match &true_front {
        Some(front) => (
            front_error(&archive, front).ok(),
            front_error_trace(&runs, front),
        ),
        None => (None, Vec::new()),
    };

    Ok(Experiment {
        problem,
        true_front,
        normalize,
        scalings,
        runs,
        archive,
        infeasible_discards,
        front_error,
        front_error_trace,
    })
}
