//! Multiobjective bat algorithm (MOBA).
//!
//! The crate is `no_std` and only needs `alloc`. It contains:
//!
//! - [`space`]: decision vectors, box bounds and clamping,
//! - [`rng`]: the seeded random stream every stochastic operation draws from,
//! - [`engine`]: the single-objective bat algorithm,
//! - [`pareto`]: dominance, weighted-sum scalarization and the non-dominated archive,
//! - [`moba`]: the weighted-sum outer loop that turns the engine into a
//!   multiobjective optimizer,
//! - [`problems`]: ZDT1/2/3, LZ4 and the welded-beam design problem,
//! - [`metrics`]: analytic true fronts, the front error and convergence traces.
//!
//! Every run is a pure function of its inputs and seed.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod engine;
mod error;
pub mod metrics;
pub mod moba;
pub mod params;
pub mod pareto;
pub mod problems;
pub mod rng;
pub mod space;

pub use engine::{run_single_objective, Bat, FnObjective, Population, ScalarObjective, SingleRun};
pub use error::{Error, Result};
pub use metrics::{front_error, ConvergenceTrace, FrontError, TraceRecord, TrueFront};
pub use moba::{run_moba, MobaOptions, MobaOutcome, WeightRun};
pub use params::BatParams;
pub use pareto::{dominates, weakly_dominates, ObjectiveVector, ParetoArchive, WeightVector};
pub use problems::{problem_by_name, ObjectiveScaling, Problem, PROBLEM_NAMES};
pub use rng::RngStream;
pub use space::{BoundsBox, RealVector};
