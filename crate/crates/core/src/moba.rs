//! Weighted-sum multiobjective bat algorithm.
//!
//! Each of `n_points` weight-runs draws a random weight vector, collapses the
//! problem to a penalized weighted sum, runs the single-objective engine and
//! records its final best point. Feasible records are merged into a Pareto
//! archive.
//!
//! Weight-run `j` of restart `r` draws every random number from
//! `RngStream::derive(seed, r, j)`, so runs can execute in any order or in
//! parallel without changing results.
//!
//! With normalization on, each restart first runs one anchor per objective
//! (unit weight on that objective, stream index `ANCHOR_STREAM_BASE + k`). The
//! anchors' objective spread fixes an [`ObjectiveScaling`] that every
//! weight-run of the restart scalarizes through.

use alloc::vec;
use alloc::vec::Vec;

use crate::engine::run_single_objective_observed;
use crate::error::{Error, Result};
use crate::metrics::{front_error_of_points, ConvergenceTrace, FrontError, TrueFront};
use crate::params::BatParams;
use crate::pareto::{non_dominated_indices, sample_weights, ObjectiveVector, ParetoArchive, WeightVector};
use crate::problems::{
    ObjectiveScaling, PenalizedObjective, Problem, DEFAULT_PENALTY, FEASIBILITY_TOLERANCE,
};
use crate::rng::RngStream;
use crate::space::RealVector;

#[derive(Debug, Clone, PartialEq)]
pub struct MobaOptions {
    /// Number of weight-runs, one candidate Pareto point each.
    pub n_points: usize,
    pub penalty: f64,
    /// Restart index used when deriving random streams.
    pub restart: u64,
    /// Record each run's best point every this many iterations (and at the
    /// final iteration).
    pub snapshot_every: Option<usize>,
    /// Scalarize anchor-normalized objectives. Ignored when `scaling` is set.
    pub normalize: bool,
    /// Fixed objective scaling for every weight-run.
    pub scaling: Option<ObjectiveScaling>,
}

/// First stream index used by anchor runs; far above any weight-run index.
pub const ANCHOR_STREAM_BASE: u64 = 1 << 48;

impl Default for MobaOptions {
    fn default() -> Self {
        MobaOptions {
            n_points: 50,
            penalty: DEFAULT_PENALTY,
            restart: 0,
            snapshot_every: None,
            normalize: false,
            scaling: None,
        }
    }
}

impl MobaOptions {
    /// Options with `normalize` set to the problem's preference.
    pub fn for_problem(problem: &dyn Problem) -> Self {
        MobaOptions {
            normalize: problem.normalize_by_default(),
            ..MobaOptions::default()
        }
    }
}

/// Raw objectives of a weight-run's best bat at one iteration.
#[derive(Debug, Clone, PartialEq)]
pub struct Snapshot {
    pub iteration: usize,
    pub objectives: Vec<f64>,
    pub feasible: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct WeightRun {
    pub restart: u64,
    pub index: usize,
    pub weights: WeightVector,
    pub decision: RealVector,
    /// Unpenalized objectives at `decision`.
    pub objectives: Vec<f64>,
    /// All constraints within tolerance and all objectives finite.
    pub feasible: bool,
    /// Best penalized scalar value per iteration.
    pub trace: ConvergenceTrace,
    pub snapshots: Vec<Snapshot>,
    pub nan_rejections: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MobaOutcome {
    pub archive: ParetoArchive,
    pub runs: Vec<WeightRun>,
    pub infeasible_discards: usize,
}

fn evaluate_record(problem: &dyn Problem, x: &[f64]) -> (Vec<f64>, bool) {
    let (f, g) = problem.evaluate_all(x);
    let feasible =
        f.iter().all(|v| v.is_finite()) && g.iter().all(|&v| v <= FEASIBILITY_TOLERANCE);
    (f, feasible)
}

fn check_inputs(problem: &dyn Problem, p: &BatParams, opts: &MobaOptions) -> Result<()> {
    p.validate()?;
    if opts.n_points == 0 {
        return Err(Error::param("n_points", "must be at least 1"));
    }
    if problem.num_objectives() < 2 {
        return Err(Error::param("problem", "needs at least two objectives"));
    }
    if opts.snapshot_every == Some(0) {
        return Err(Error::param("snapshot_every", "must be positive"));
    }
    Ok(())
}

/// Runs weight-run `index` of restart `opts.restart`.
pub fn run_weight(
    problem: &dyn Problem,
    p: &BatParams,
    opts: &MobaOptions,
    index: usize,
) -> Result<WeightRun> {
    check_inputs(problem, p, opts)?;
    let mut rng = RngStream::derive(p.seed, opts.restart, index as u64);
    let weights = sample_weights(problem.num_objectives(), &mut rng)?;
    let mut objective = PenalizedObjective::new(problem, weights.clone(), opts.penalty)?;
    if let Some(scaling) = &opts.scaling {
        objective = objective.with_scaling(scaling.clone())?;
    }
    let mut snapshots = Vec::new();
    let run = run_single_objective_observed(&mut objective, p, &mut rng, |pop| {
        if let Some(every) = opts.snapshot_every {
            let t = pop.iteration();
            if t % every == 0 || t == p.max_iterations {
                let (objectives, feasible) = evaluate_record(problem, &pop.best().position);
                snapshots.push(Snapshot {
                    iteration: t,
                    objectives,
                    feasible,
                });
            }
        }
    });
    let (objectives, feasible) = evaluate_record(problem, &run.best_position);
    Ok(WeightRun {
        restart: opts.restart,
        index,
        weights,
        decision: run.best_position,
        objectives,
        feasible,
        trace: run.trace,
        snapshots,
        nan_rejections: run.nan_rejections,
    })
}

/// Runs the anchor for objective `k` of restart `opts.restart` and returns
/// its raw objectives.
pub fn run_anchor(problem: &dyn Problem, p: &BatParams, opts: &MobaOptions, k: usize) -> Result<Vec<f64>> {
    check_inputs(problem, p, opts)?;
    let m = problem.num_objectives();
    if k >= m {
        return Err(Error::param("anchor", "objective index out of range"));
    }
    let mut rng = RngStream::derive(p.seed, opts.restart, ANCHOR_STREAM_BASE + k as u64);
    let mut w = vec![0.0; m];
    w[k] = 1.0;
    let mut objective = PenalizedObjective::new(problem, WeightVector::new(w)?, opts.penalty)?;
    let run = run_single_objective_observed(&mut objective, p, &mut rng, |_| {});
    Ok(problem.objectives(&run.best_position))
}

/// Scaling fitted to all anchors of restart `opts.restart`.
pub fn anchor_scaling(problem: &dyn Problem, p: &BatParams, opts: &MobaOptions) -> Result<ObjectiveScaling> {
    let anchors = (0..problem.num_objectives())
        .map(|k| run_anchor(problem, p, opts, k))
        .collect::<Result<Vec<_>>>()?;
    ObjectiveScaling::from_anchors(&anchors)
}

/// Options with `scaling` filled in when normalization is requested.
pub fn resolve_scaling(problem: &dyn Problem, p: &BatParams, opts: &MobaOptions) -> Result<MobaOptions> {
    let mut out = opts.clone();
    if out.normalize && out.scaling.is_none() {
        out.scaling = Some(anchor_scaling(problem, p, opts)?);
    }
    Ok(out)
}

/// Inserts every feasible run result in order; returns the archive and the
/// number of discarded infeasible results.
pub fn collect_archive<'a, I>(runs: I) -> Result<(ParetoArchive, usize)>
where
    I: IntoIterator<Item = &'a WeightRun>,
{
    let mut archive = ParetoArchive::new();
    let mut discards = 0;
    for run in runs {
        match (run.feasible, ObjectiveVector::new(run.objectives.clone())) {
            (true, Ok(f)) => {
                archive.insert(run.decision.clone(), f)?;
            }
            _ => discards += 1,
        }
    }
    Ok((archive, discards))
}

/// One full MOBA pass: `opts.n_points` weight-runs merged into an archive.
pub fn run_moba(problem: &dyn Problem, p: &BatParams, opts: &MobaOptions) -> Result<MobaOutcome> {
    check_inputs(problem, p, opts)?;
    let opts = &resolve_scaling(problem, p, opts)?;
    let runs = (0..opts.n_points)
        .map(|j| run_weight(problem, p, opts, j))
        .collect::<Result<Vec<_>>>()?;
    let (archive, infeasible_discards) = collect_archive(&runs)?;
    Ok(MobaOutcome {
        archive,
        runs,
        infeasible_discards,
    })
}

/// Front error of the non-dominated set of all runs' feasible snapshots at
/// each snapshot iteration. Runs must share the same snapshot schedule.
pub fn front_error_trace<'a, I>(runs: I, front: &TrueFront) -> Vec<(usize, Option<FrontError>)>
where
    I: IntoIterator<Item = &'a WeightRun>,
{
    let runs: Vec<&WeightRun> = runs.into_iter().collect();
    let Some(first) = runs.first() else {
        return Vec::new();
    };
    first
        .snapshots
        .iter()
        .enumerate()
        .map(|(s, snap)| {
            let points: Vec<&[f64]> = runs
                .iter()
                .filter_map(|r| r.snapshots.get(s))
                .filter(|sn| sn.feasible)
                .map(|sn| sn.objectives.as_slice())
                .collect();
            let kept = non_dominated_indices(&points);
            let error = front_error_of_points(kept.iter().map(|&i| points[i]), front).ok();
            (snap.iteration, error)
        })
        .collect()
}
