//! Benchmark problems and penalty-based constraint handling.

mod lz4;
mod welded_beam;
mod zdt;

use alloc::boxed::Box;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

pub use lz4::{lz4, lz4_h, lz4_pareto_set_point, Lz4};
pub use welded_beam::{welded_beam, welded_beam_terms, WeldedBeam, WeldedBeamTerms};
pub use zdt::{zdt1, zdt2, zdt3, zdt_g, Zdt, ZdtVariant};

use crate::engine::ScalarObjective;
use crate::error::{Error, Result};
use crate::metrics::TrueFront;
use crate::pareto::{weighted_sum, WeightVector};
use crate::space::BoundsBox;

/// Registry names, exactly as accepted by [`problem_by_name`].
pub const PROBLEM_NAMES: [&str; 5] = ["zdt1", "zdt2", "zdt3", "lz4", "welded-beam"];

/// Default penalty coefficient for constraint violations.
pub const DEFAULT_PENALTY: f64 = 1e6;

/// A point is feasible when every `g_j(x) <= FEASIBILITY_TOLERANCE`.
pub const FEASIBILITY_TOLERANCE: f64 = 1e-6;

/// A box-bounded multiobjective problem with inequality constraints `g_j(x) <= 0`.
pub trait Problem: Send + Sync {
    fn name(&self) -> &str;

    fn bounds(&self) -> &BoundsBox;

    fn num_objectives(&self) -> usize;

    fn num_constraints(&self) -> usize {
        0
    }

    /// Writes the objectives and constraint values at `x`. Slices have exactly
    /// `num_objectives()` and `num_constraints()` elements.
    fn evaluate(&self, x: &[f64], objectives: &mut [f64], constraints: &mut [f64]);

    fn true_front(&self) -> Option<TrueFront> {
        None
    }

    fn dimension(&self) -> usize {
        self.bounds().dim()
    }

    fn objectives(&self, x: &[f64]) -> Vec<f64> {
        self.evaluate_all(x).0
    }

    fn constraints(&self, x: &[f64]) -> Vec<f64> {
        self.evaluate_all(x).1
    }

    fn evaluate_all(&self, x: &[f64]) -> (Vec<f64>, Vec<f64>) {
        let mut f = vec![0.0; self.num_objectives()];
        let mut g = vec![0.0; self.num_constraints()];
        self.evaluate(x, &mut f, &mut g);
        (f, g)
    }

    fn is_feasible(&self, x: &[f64]) -> bool {
        self.constraints(x).iter().all(|&g| g <= FEASIBILITY_TOLERANCE)
    }

    /// Whether weighted sums should see anchor-normalized objectives unless
    /// the caller says otherwise. True when the objective scales differ by
    /// orders of magnitude.
    fn normalize_by_default(&self) -> bool {
        false
    }
}

/// Affine map `f_k -> (f_k - offset_k) / scale_k` applied before scalarization.
#[derive(Debug, Clone, PartialEq)]
pub struct ObjectiveScaling {
    offset: Vec<f64>,
    scale: Vec<f64>,
}

impl ObjectiveScaling {
    pub fn new(offset: Vec<f64>, scale: Vec<f64>) -> Result<Self> {
        crate::error::check_dims(offset.len(), scale.len())?;
        if offset.is_empty() {
            return Err(Error::EmptyVector);
        }
        if let Some(i) = offset.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite { index: i });
        }
        if scale.iter().any(|&s| !(s > 0.0 && s.is_finite())) {
            return Err(Error::param("scale", "entries must be finite and positive"));
        }
        Ok(ObjectiveScaling { offset, scale })
    }

    /// Offsets from the per-objective minimum and scales from the spread of a
    /// set of anchor points. Degenerate spreads fall back to 1.
    pub fn from_anchors(anchors: &[Vec<f64>]) -> Result<Self> {
        let k = anchors.first().ok_or(Error::EmptyVector)?.len();
        let mut lo = vec![f64::INFINITY; k];
        let mut hi = vec![f64::NEG_INFINITY; k];
        for a in anchors {
            crate::error::check_dims(k, a.len())?;
            for (i, &v) in a.iter().enumerate() {
                lo[i] = lo[i].min(v);
                hi[i] = hi[i].max(v);
            }
        }
        let scale = lo
            .iter()
            .zip(&hi)
            .map(|(l, h)| {
                let s = h - l;
                if s > 0.0 && s.is_finite() {
                    s
                } else {
                    1.0
                }
            })
            .collect();
        ObjectiveScaling::new(lo, scale)
    }

    pub fn offset(&self) -> &[f64] {
        &self.offset
    }

    pub fn scale(&self) -> &[f64] {
        &self.scale
    }

    pub fn len(&self) -> usize {
        self.offset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.offset.is_empty()
    }

    pub fn apply_in_place(&self, f: &mut [f64]) {
        for ((v, o), s) in f.iter_mut().zip(&self.offset).zip(&self.scale) {
            *v = (*v - o) / s;
        }
    }
}

/// Looks up a registry problem; `dimension` overrides the default size.
pub fn problem_by_name(name: &str, dimension: Option<usize>) -> Result<Box<dyn Problem>> {
    Ok(match name {
        "zdt1" => Box::new(Zdt::new(ZdtVariant::Zdt1, dimension.unwrap_or(zdt::DEFAULT_DIMENSION))?),
        "zdt2" => Box::new(Zdt::new(ZdtVariant::Zdt2, dimension.unwrap_or(zdt::DEFAULT_DIMENSION))?),
        "zdt3" => Box::new(Zdt::new(ZdtVariant::Zdt3, dimension.unwrap_or(zdt::DEFAULT_DIMENSION))?),
        "lz4" => Box::new(Lz4::new(dimension.unwrap_or(lz4::DEFAULT_DIMENSION))?),
        "welded-beam" => match dimension {
            None | Some(4) => Box::new(WeldedBeam::new()),
            Some(d) => {
                return Err(Error::param(
                    "dimension",
                    alloc::format!("welded-beam has 4 variables, got {d}"),
                ))
            }
        },
        other => return Err(Error::UnknownProblem(other.to_string())),
    })
}

/// `sum_j max(0, g_j)^2`.
pub fn squared_violation(constraints: &[f64]) -> f64 {
    constraints
        .iter()
        .map(|&g| {
            let v = g.max(0.0);
            v * v
        })
        .sum()
}

/// Weighted sum of the objectives plus `penalty * sum_j max(0, g_j)^2`.
pub fn penalized_scalar(problem: &dyn Problem, x: &[f64], w: &WeightVector, penalty: f64) -> f64 {
    let (f, g) = problem.evaluate_all(x);
    weighted_sum(&f, w) + penalty * squared_violation(&g)
}

/// A problem collapsed to one penalized weighted-sum objective.
pub struct PenalizedObjective<'a> {
    problem: &'a dyn Problem,
    weights: WeightVector,
    penalty: f64,
    scaling: Option<ObjectiveScaling>,
    objectives: Vec<f64>,
    constraints: Vec<f64>,
}

impl<'a> PenalizedObjective<'a> {
    pub fn new(problem: &'a dyn Problem, weights: WeightVector, penalty: f64) -> Result<Self> {
        crate::error::check_dims(problem.num_objectives(), weights.len())?;
        if !(penalty >= 0.0 && penalty.is_finite()) {
            return Err(Error::param("penalty", "must be finite and nonnegative"));
        }
        Ok(PenalizedObjective {
            problem,
            weights,
            penalty,
            scaling: None,
            objectives: vec![0.0; problem.num_objectives()],
            constraints: vec![0.0; problem.num_constraints()],
        })
    }

    /// Scalarizes normalized objectives instead of raw ones.
    pub fn with_scaling(mut self, scaling: ObjectiveScaling) -> Result<Self> {
        crate::error::check_dims(self.objectives.len(), scaling.len())?;
        self.scaling = Some(scaling);
        Ok(self)
    }

    pub fn weights(&self) -> &WeightVector {
        &self.weights
    }
}

impl ScalarObjective for PenalizedObjective<'_> {
    fn bounds(&self) -> &BoundsBox {
        self.problem.bounds()
    }

    fn evaluate(&mut self, x: &[f64]) -> f64 {
        self.problem.evaluate(x, &mut self.objectives, &mut self.constraints);
        if let Some(scaling) = &self.scaling {
            scaling.apply_in_place(&mut self.objectives);
        }
        let base = weighted_sum(&self.objectives, &self.weights);
        if self.constraints.is_empty() {
            base
        } else {
            base + self.penalty * squared_violation(&self.constraints)
        }
    }
}
