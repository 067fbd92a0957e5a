//! Single-objective bat algorithm.
//!
//! One engine step moves every bat once: draw a pulse frequency, update the
//! velocity and position, optionally replace the flight with a random walk
//! around the current best, then accept the candidate if the bat's loudness
//! gate opens and the candidate strictly improves that bat's own fitness.
//! Accepted bats get quieter (`A <- alpha * A`) and their pulse rate moves
//! toward its ceiling `r0 * (1 - exp(-gamma * k))`, where `k` counts the bat's
//! accepted moves.
//!
//! Velocity follows `v <- v + (x - x_best) * f` exactly. Out-of-box positions
//! are clamped onto the box faces.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{check_dims, Result};
use crate::metrics::ConvergenceTrace;
use crate::params::BatParams;
use crate::rng::RngStream;
use crate::space::{uniform_in_box, BoundsBox, RealVector};

/// A scalar function to minimize over a box.
pub trait ScalarObjective {
    fn bounds(&self) -> &BoundsBox;

    /// Must be deterministic. NaN results are rejected by the engine.
    fn evaluate(&mut self, x: &[f64]) -> f64;
}

/// Adapts a closure into a [`ScalarObjective`].
pub struct FnObjective<F> {
    bounds: BoundsBox,
    f: F,
}

impl<F: FnMut(&[f64]) -> f64> FnObjective<F> {
    pub fn new(bounds: BoundsBox, f: F) -> Self {
        FnObjective { bounds, f }
    }
}

impl<F: FnMut(&[f64]) -> f64> ScalarObjective for FnObjective<F> {
    fn bounds(&self) -> &BoundsBox {
        &self.bounds
    }

    fn evaluate(&mut self, x: &[f64]) -> f64 {
        (self.f)(x)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Bat {
    pub position: RealVector,
    pub velocity: RealVector,
    pub frequency: f64,
    pub loudness: f64,
    pub pulse_rate: f64,
    pub initial_pulse_rate: f64,
    /// Objective value at `position`; `+inf` if the evaluation was NaN.
    pub fitness: f64,
    /// Number of strict improvements on this bat's own fitness, accepted or
    /// not; drives the pulse-rate schedule.
    pub improvements: u32,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Population {
    bats: Vec<Bat>,
    best_index: usize,
    iteration: usize,
    nan_rejections: u64,
}

impl Population {
    /// Uniform positions, zero velocities, frequencies in `[f_min, f_max]`,
    /// loudness and initial pulse rate from their init ranges.
    pub fn initialize<O: ScalarObjective + ?Sized>(
        obj: &mut O,
        p: &BatParams,
        rng: &mut RngStream,
    ) -> Self {
        let bounds = obj.bounds().clone();
        let dim = bounds.dim();
        let mut nan_rejections = 0;
        let bats = (0..p.population_size)
            .map(|_| {
                let position = uniform_in_box(&bounds, rng);
                let frequency = sample_frequency(rng, p);
                let loudness = rng.uniform(p.loudness_init.0, p.loudness_init.1);
                let initial_pulse_rate = rng.uniform(p.rate_init.0, p.rate_init.1);
                let mut fitness = obj.evaluate(&position);
                if fitness.is_nan() {
                    nan_rejections += 1;
                    fitness = f64::INFINITY;
                }
                Bat {
                    position,
                    velocity: RealVector::zeros(dim),
                    frequency,
                    loudness,
                    pulse_rate: 0.0,
                    initial_pulse_rate,
                    fitness,
                    improvements: 0,
                }
            })
            .collect();
        let mut pop = Population {
            bats,
            best_index: 0,
            iteration: 0,
            nan_rejections,
        };
        pop.rank();
        pop
    }

    pub fn bats(&self) -> &[Bat] {
        &self.bats
    }

    pub fn best_index(&self) -> usize {
        self.best_index
    }

    pub fn best(&self) -> &Bat {
        &self.bats[self.best_index]
    }

    pub fn iteration(&self) -> usize {
        self.iteration
    }

    /// Candidates discarded because the objective returned NaN.
    pub fn nan_rejections(&self) -> u64 {
        self.nan_rejections
    }

    pub fn average_loudness(&self) -> f64 {
        self.bats.iter().map(|b| b.loudness).sum::<f64>() / self.bats.len() as f64
    }

    fn rank(&mut self) {
        let mut best = 0;
        for (i, bat) in self.bats.iter().enumerate().skip(1) {
            if bat.fitness < self.bats[best].fitness {
                best = i;
            }
        }
        self.best_index = best;
    }
}

/// `f_min + (f_max - f_min) * beta`.
pub fn frequency_from_beta(beta: f64, p: &BatParams) -> f64 {
    p.f_min + (p.f_max - p.f_min) * beta
}

pub fn sample_frequency(rng: &mut RngStream, p: &BatParams) -> f64 {
    frequency_from_beta(rng.next_f64(), p)
}

/// `v + (x - x_best) * f`.
pub fn update_velocity(v: &[f64], x: &[f64], x_best: &[f64], f: f64) -> Result<RealVector> {
    check_dims(v.len(), x.len())?;
    check_dims(v.len(), x_best.len())?;
    RealVector::new(
        v.iter()
            .zip(x.iter().zip(x_best))
            .map(|(&vi, (&xi, &bi))| vi + (xi - bi) * f)
            .collect(),
    )
}

/// `clamp(x + v)`.
pub fn update_position(x: &[f64], v: &[f64], b: &BoundsBox) -> Result<RealVector> {
    check_dims(b.dim(), x.len())?;
    check_dims(x.len(), v.len())?;
    let mut y: Vec<f64> = x.iter().zip(v).map(|(a, b)| a + b).collect();
    b.clamp_in_place(&mut y);
    Ok(RealVector::from_vec_unchecked(y))
}

/// `clamp(x_old + epsilon * avg_loudness)` for a given `epsilon`.
pub fn random_walk_step(
    x_old: &[f64],
    epsilon: &[f64],
    avg_loudness: f64,
    b: &BoundsBox,
) -> Result<RealVector> {
    check_dims(b.dim(), x_old.len())?;
    check_dims(x_old.len(), epsilon.len())?;
    let mut y: Vec<f64> = x_old
        .iter()
        .zip(epsilon)
        .map(|(x, e)| x + e * avg_loudness)
        .collect();
    b.clamp_in_place(&mut y);
    Ok(RealVector::from_vec_unchecked(y))
}

/// Random walk with a fresh `epsilon` uniform in `[-1, 1]^d`.
pub fn local_random_walk(
    x_old: &[f64],
    avg_loudness: f64,
    rng: &mut RngStream,
    b: &BoundsBox,
) -> Result<RealVector> {
    let eps = rng.symmetric_vec(x_old.len());
    random_walk_step(x_old, &eps, avg_loudness, b)
}

/// Returns `(alpha * a, r0 * (1 - exp(-gamma * t)))`.
pub fn update_loudness_and_rate(a: f64, r0: f64, p: &BatParams, t: u32) -> (f64, f64) {
    (
        p.alpha * a,
        r0 * (1.0 - libm::exp(-p.gamma * f64::from(t))),
    )
}

/// Moves every bat once and re-ranks the population.
///
/// The best position is snapshotted at the start of the step; all bats fly
/// relative to it and the average loudness of the same instant.
///
/// A candidate that strictly improves the bat's fitness cools the bat
/// (loudness and pulse rate advance one step). It replaces the bat's state
/// when `rand < A_i`, or unconditionally when it beats the best fitness seen
/// so far in this step.
pub fn engine_step<O: ScalarObjective + ?Sized>(
    pop: &mut Population,
    obj: &mut O,
    p: &BatParams,
    rng: &mut RngStream,
) {
    let bounds = obj.bounds().clone();
    let best = pop.best().position.clone();
    let mut best_fitness = pop.best().fitness;
    let avg_loudness = pop.average_loudness();
    let dim = best.dim();
    let mut velocity = vec![0.0; dim];
    let mut candidate = vec![0.0; dim];

    for bat in pop.bats.iter_mut() {
        let f = sample_frequency(rng, p);
        bat.frequency = f;
        for k in 0..dim {
            velocity[k] = bat.velocity[k] + (bat.position[k] - best[k]) * f;
            candidate[k] = bat.position[k] + velocity[k];
        }
        bounds.clamp_in_place(&mut candidate);

        if rng.next_f64() > bat.pulse_rate {
            for k in 0..dim {
                candidate[k] = best[k] + (2.0 * rng.next_f64() - 1.0) * avg_loudness;
            }
            bounds.clamp_in_place(&mut candidate);
        }

        let fitness = obj.evaluate(&candidate);
        let gate = rng.next_f64();
        if fitness.is_nan() {
            pop.nan_rejections += 1;
            continue;
        }
        if fitness >= bat.fitness {
            continue;
        }

        // any improvement cools the bat, accepted or not
        let accept = gate < bat.loudness || fitness < best_fitness;
        bat.improvements += 1;
        let (loudness, rate) =
            update_loudness_and_rate(bat.loudness, bat.initial_pulse_rate, p, bat.improvements);
        bat.loudness = loudness;
        bat.pulse_rate = rate;
        if accept {
            bat.position.as_mut_slice().copy_from_slice(&candidate);
            // velocity stays finite while the box is finite
            bat.velocity = RealVector::from_vec_unchecked(velocity.clone());
            bat.fitness = fitness;
            best_fitness = best_fitness.min(fitness);
        }
    }

    pop.iteration += 1;
    pop.rank();
}

#[derive(Debug, Clone, PartialEq)]
pub struct SingleRun {
    pub best_position: RealVector,
    pub best_fitness: f64,
    /// Best fitness after initialization and after every step (`max_iterations + 1` records).
    pub trace: ConvergenceTrace,
    pub nan_rejections: u64,
}

pub fn run_single_objective<O: ScalarObjective + ?Sized>(
    obj: &mut O,
    p: &BatParams,
    rng: &mut RngStream,
) -> SingleRun {
    run_single_objective_observed(obj, p, rng, |_| {})
}

/// Like [`run_single_objective`], calling `observer` after initialization and
/// after every step.
pub fn run_single_objective_observed<O, F>(
    obj: &mut O,
    p: &BatParams,
    rng: &mut RngStream,
    mut observer: F,
) -> SingleRun
where
    O: ScalarObjective + ?Sized,
    F: FnMut(&Population),
{
    let mut pop = Population::initialize(obj, p, rng);
    let mut trace = ConvergenceTrace::with_capacity(p.max_iterations + 1);
    trace.push_unchecked(0, pop.best().fitness, None);
    observer(&pop);
    for _ in 0..p.max_iterations {
        engine_step(&mut pop, obj, p, rng);
        trace.push_unchecked(pop.iteration, pop.best().fitness, None);
        observer(&pop);
    }
    let best = pop.best();
    SingleRun {
        best_position: best.position.clone(),
        best_fitness: best.fitness,
        trace,
        nan_rejections: pop.nan_rejections,
    }
}
