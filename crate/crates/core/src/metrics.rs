//! True Pareto fronts, the squared front error and convergence traces.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::pareto::ParetoArchive;

/// Analytic `f2 = shape(f1)` fronts on `f1 in [0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrontShape {
    /// `1 - sqrt(f1)` (ZDT1).
    Convex,
    /// `1 - f1^2` (ZDT2, LZ4).
    Concave,
}

impl FrontShape {
    pub fn f2(self, f1: f64) -> f64 {
        match self {
            FrontShape::Convex => 1.0 - libm::sqrt(f1),
            FrontShape::Concave => 1.0 - f1 * f1,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum TrueFront {
    ClosedForm(FrontShape),
    /// Mutually non-dominated points sorted by ascending `f1`.
    Sampled(Vec<[f64; 2]>),
}

/// Minimum grid size accepted by [`build_zdt3_front`].
pub const MIN_ZDT3_SAMPLES: usize = 10_000;

/// Grid size used by the ZDT3 problem's reference front.
pub const DEFAULT_ZDT3_SAMPLES: usize = 20_000;

impl TrueFront {
    /// Squared residual of one objective point.
    ///
    /// Closed-form fronts use the vertical residual at `f1` projected onto
    /// `[0, 1]`; sampled fronts use the squared distance to the nearest sample.
    pub fn squared_residual(&self, f1: f64, f2: f64) -> f64 {
        match self {
            TrueFront::ClosedForm(shape) => {
                let r = f2 - shape.f2(f1.clamp(0.0, 1.0));
                r * r
            }
            TrueFront::Sampled(points) => nearest_squared_distance(points, f1, f2),
        }
    }

    /// `(min f1, max f1)` spanned by the front.
    pub fn f1_extent(&self) -> (f64, f64) {
        match self {
            TrueFront::ClosedForm(_) => (0.0, 1.0),
            TrueFront::Sampled(points) => (
                points.first().map_or(f64::NAN, |p| p[0]),
                points.last().map_or(f64::NAN, |p| p[0]),
            ),
        }
    }
}

fn nearest_squared_distance(points: &[[f64; 2]], f1: f64, f2: f64) -> f64 {
    let start = points.partition_point(|p| p[0] < f1);
    let mut best = f64::INFINITY;
    let dist = |p: &[f64; 2]| {
        let (a, b) = (p[0] - f1, p[1] - f2);
        (a * a + b * b, a * a)
    };
    for p in &points[start..] {
        let (d, dx) = dist(p);
        if dx > best {
            break;
        }
        best = best.min(d);
    }
    for p in points[..start].iter().rev() {
        let (d, dx) = dist(p);
        if dx > best {
            break;
        }
        best = best.min(d);
    }
    best
}

/// Samples `f2 = 1 - sqrt(f1) - f1 sin(10 pi f1)` on a uniform grid over
/// `[0, 1]` and keeps the non-dominated subset.
pub fn build_zdt3_front(samples: usize) -> Result<TrueFront> {
    if samples < MIN_ZDT3_SAMPLES {
        return Err(Error::param(
            "samples",
            alloc::format!("need at least {MIN_ZDT3_SAMPLES}, got {samples}"),
        ));
    }
    let step = 1.0 / (samples - 1) as f64;
    let mut kept = Vec::new();
    let mut lowest = f64::INFINITY;
    // Ascending f1: a point survives iff its f2 beats every point to its left.
    for i in 0..samples {
        let f1 = i as f64 * step;
        let f2 = 1.0 - libm::sqrt(f1) - f1 * libm::sin(10.0 * core::f64::consts::PI * f1);
        if f2 < lowest {
            lowest = f2;
            kept.push([f1, f2]);
        }
    }
    Ok(TrueFront::Sampled(kept))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrontError {
    /// Sum of squared residuals.
    pub raw: f64,
    /// `raw / N`.
    pub per_point: f64,
    pub points: usize,
}

/// Front error of a set of two-objective points.
pub fn front_error_of_points<'a, I>(points: I, front: &TrueFront) -> Result<FrontError>
where
    I: IntoIterator<Item = &'a [f64]>,
{
    let mut raw = 0.0;
    let mut n = 0usize;
    for f in points {
        crate::error::check_dims(2, f.len())?;
        raw += front.squared_residual(f[0], f[1]);
        n += 1;
    }
    if n == 0 {
        return Err(Error::EmptyArchive);
    }
    Ok(FrontError {
        raw,
        per_point: raw / n as f64,
        points: n,
    })
}

/// Squared error of an archive against a true front.
pub fn front_error(estimated: &ParetoArchive, front: &TrueFront) -> Result<FrontError> {
    front_error_of_points(estimated.entries().iter().map(|e| e.objectives.as_slice()), front)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceRecord {
    pub iteration: usize,
    pub best_scalar: f64,
    pub front_error: Option<f64>,
}

/// Per-iteration record of the best scalar value and, optionally, the front error.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ConvergenceTrace {
    records: Vec<TraceRecord>,
}

impl ConvergenceTrace {
    pub fn new() -> Self {
        Self::default()
    }

    pub(crate) fn with_capacity(n: usize) -> Self {
        ConvergenceTrace {
            records: Vec::with_capacity(n),
        }
    }

    pub fn records(&self) -> &[TraceRecord] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn last(&self) -> Option<&TraceRecord> {
        self.records.last()
    }

    /// Appends a record; `iteration` must exceed the last recorded one.
    pub fn record(&mut self, iteration: usize, best: f64, front_error: Option<f64>) -> Result<()> {
        if let Some(last) = self.records.last() {
            if iteration <= last.iteration {
                return Err(Error::NonMonotoneIteration {
                    last: last.iteration,
                    next: iteration,
                });
            }
        }
        self.records.push(TraceRecord {
            iteration,
            best_scalar: best,
            front_error,
        });
        Ok(())
    }

    pub(crate) fn push_unchecked(&mut self, iteration: usize, best: f64, front_error: Option<f64>) {
        debug_assert!(self.records.last().is_none_or(|r| r.iteration < iteration));
        self.records.push(TraceRecord {
            iteration,
            best_scalar: best,
            front_error,
        });
    }
}

/// Appends `(iteration, best)` plus the front error when both an archive and a
/// front are given. An empty archive records no front error.
pub fn record_trace_point(
    trace: &mut ConvergenceTrace,
    iteration: usize,
    best: f64,
    archive: Option<&ParetoArchive>,
    front: Option<&TrueFront>,
) -> Result<()> {
    let error = match (archive, front) {
        (Some(a), Some(f)) if !a.is_empty() => Some(front_error(a, f)?.raw),
        _ => None,
    };
    trace.record(iteration, best, error)
}
