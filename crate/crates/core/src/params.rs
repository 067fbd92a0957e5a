use alloc::format;

use crate::error::{Error, Result};

/// Bat-algorithm parameters.
///
/// Defaults: `n = 50`, `alpha = gamma = 0.9`, frequency range `[0, 1]`,
/// initial loudness in `[1, 2]`, initial pulse rate in `[0, 0.9]`, 5000 iterations.
#[derive(Debug, Clone, PartialEq)]
pub struct BatParams {
    pub population_size: usize,
    pub f_min: f64,
    pub f_max: f64,
    /// Loudness cooling factor.
    pub alpha: f64,
    /// Pulse-rate growth constant.
    pub gamma: f64,
    pub loudness_init: (f64, f64),
    pub rate_init: (f64, f64),
    pub max_iterations: usize,
    pub seed: u64,
}

impl Default for BatParams {
    fn default() -> Self {
        BatParams {
            population_size: 50,
            f_min: 0.0,
            f_max: 1.0,
            alpha: 0.9,
            gamma: 0.9,
            loudness_init: (1.0, 2.0),
            rate_init: (0.0, 0.9),
            max_iterations: 5000,
            seed: 0,
        }
    }
}

impl BatParams {
    pub fn validate(&self) -> Result<()> {
        if self.population_size == 0 {
            return Err(Error::param("population_size", "must be at least 1"));
        }
        if !(self.f_min.is_finite() && self.f_max.is_finite() && self.f_min <= self.f_max) {
            return Err(Error::param(
                "f_max",
                format!("need finite f_min <= f_max, got [{}, {}]", self.f_min, self.f_max),
            ));
        }
        if !(self.alpha > 0.0 && self.alpha <= 1.0) {
            return Err(Error::param("alpha", format!("{} is outside (0, 1]", self.alpha)));
        }
        if self.gamma.is_nan() || self.gamma <= 0.0 {
            return Err(Error::param("gamma", format!("{} is not positive", self.gamma)));
        }
        let (a_lo, a_hi) = self.loudness_init;
        if !(a_lo > 0.0 && a_lo <= a_hi && a_hi.is_finite()) {
            return Err(Error::param(
                "loudness_init",
                format!("[{a_lo}, {a_hi}] must be a positive finite interval"),
            ));
        }
        let (r_lo, r_hi) = self.rate_init;
        if !(0.0 <= r_lo && r_lo <= r_hi && r_hi <= 1.0) {
            return Err(Error::param(
                "rate_init",
                format!("[{r_lo}, {r_hi}] must lie inside [0, 1]"),
            ));
        }
        Ok(())
    }
}
