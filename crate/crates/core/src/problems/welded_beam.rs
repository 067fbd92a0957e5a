//! Bi-objective welded beam: minimize fabrication cost and end deflection.
//!
//! Decision vector order is `(w, L, d, h)`: weld width, weld length, beam
//! depth and beam thickness.

use crate::problems::Problem;
use crate::space::{BoundsBox, RealVector};

/// Intermediate quantities of the beam model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeldedBeamTerms {
    /// Bending stress.
    pub sigma: f64,
    pub q: f64,
    pub d_half_diag: f64,
    /// Polar moment of inertia of the weld group.
    pub j: f64,
    /// End deflection.
    pub delta: f64,
    /// Secondary shear stress.
    pub beta: f64,
    /// Primary shear stress.
    pub alpha: f64,
    /// Combined shear stress.
    pub tau: f64,
    /// Buckling load.
    pub buckling_load: f64,
}

pub fn welded_beam_terms(x: &[f64]) -> WeldedBeamTerms {
    let (w, l, d, h) = (x[0], x[1], x[2], x[3]);
    let sqrt2 = core::f64::consts::SQRT_2;
    let sigma = 504_000.0 / (h * d * d);
    let q = 6000.0 * (14.0 + l / 2.0);
    let wd = w + d;
    let d_half_diag = 0.5 * libm::sqrt(l * l + wd * wd);
    let j = sqrt2 * w * l * (l * l / 6.0 + wd * wd / 2.0);
    let delta = 65_856.0 / (30_000.0 * h * d * d * d);
    let beta = q * d_half_diag / j;
    let alpha = 6000.0 / (sqrt2 * w * l);
    let tau = libm::sqrt(alpha * alpha + alpha * beta * l / d_half_diag + beta * beta);
    let buckling_load =
        0.61423e6 * (d * h * h * h / 6.0) * (1.0 - d * libm::sqrt(30.0 / 48.0) / 28.0);
    WeldedBeamTerms {
        sigma,
        q,
        d_half_diag,
        j,
        delta,
        beta,
        alpha,
        tau,
        buckling_load,
    }
}

/// Objectives `(cost, deflection)` and constraints `g1..g7` (feasible when `<= 0`).
pub fn welded_beam(x: &[f64]) -> ([f64; 2], [f64; 7]) {
    let (w, l, d, h) = (x[0], x[1], x[2], x[3]);
    let t = welded_beam_terms(x);
    let cost = 1.10471 * w * w * l + 0.04811 * d * h * (14.0 + l);
    let g = [
        w - h,
        t.delta - 0.25,
        t.tau - 13_600.0,
        t.sigma - 30_000.0,
        0.10471 * w * w + 0.04811 * h * d * (14.0 + l) - 5.0,
        0.125 - w,
        6000.0 - t.buckling_load,
    ];
    ([cost, t.delta], g)
}

#[derive(Debug, Clone)]
pub struct WeldedBeam {
    bounds: BoundsBox,
}

impl WeldedBeam {
    /// `0.125 <= w, h <= 2` and `0.1 <= L, d <= 10`.
    pub fn new() -> Self {
        let lower = RealVector::from_vec_unchecked(alloc::vec![0.125, 0.1, 0.1, 0.125]);
        let upper = RealVector::from_vec_unchecked(alloc::vec![2.0, 10.0, 10.0, 2.0]);
        WeldedBeam {
            bounds: BoundsBox::new(lower, upper).expect("static bounds are ordered"),
        }
    }
}

impl Default for WeldedBeam {
    fn default() -> Self {
        Self::new()
    }
}

impl Problem for WeldedBeam {
    fn name(&self) -> &str {
        "welded-beam"
    }

    fn bounds(&self) -> &BoundsBox {
        &self.bounds
    }

    fn num_objectives(&self) -> usize {
        2
    }

    fn num_constraints(&self) -> usize {
        7
    }

    fn evaluate(&self, x: &[f64], objectives: &mut [f64], constraints: &mut [f64]) {
        let (f, g) = welded_beam(x);
        objectives.copy_from_slice(&f);
        constraints.copy_from_slice(&g);
    }

    // cost is O(1), deflection O(1e-2)
    fn normalize_by_default(&self) -> bool {
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::RngStream;
    use crate::space::uniform_in_box;

    #[test]
    fn unit_design() {
        let (f, g) = welded_beam(&[1.0, 1.0, 1.0, 1.0]);
        assert!((f[0] - 1.82636).abs() < 1e-9, "{}", f[0]);
        assert!((f[1] - 2.1952).abs() < 1e-9);
        assert!((g[1] - 1.9452).abs() < 1e-9);
        assert!(g[1] > 0.0);
        assert_eq!(g[0], 0.0);
    }

    #[test]
    fn g1_zero_when_w_equals_h() {
        let (_, g) = welded_beam(&[0.7, 3.0, 5.0, 0.7]);
        assert_eq!(g[0], 0.0);
    }

    #[test]
    fn terms_at_a_reference_point() {
        // hand evaluation at (w, L, d, h) = (0.5, 2, 8, 1)
        let t = welded_beam_terms(&[0.5, 2.0, 8.0, 1.0]);
        assert!((t.sigma - 7875.0).abs() < 1e-9);
        assert!((t.q - 90_000.0).abs() < 1e-9);
        assert!((t.d_half_diag - 0.5 * (4.0f64 + 72.25).sqrt()).abs() < 1e-12);
        let j = std::f64::consts::SQRT_2 * 1.0 * (4.0 / 6.0 + 72.25 / 2.0);
        assert!((t.j - j).abs() < 1e-9);
        assert!((t.delta - 65_856.0 / (30_000.0 * 512.0)).abs() < 1e-12);
        assert!((t.alpha - 6000.0 / std::f64::consts::SQRT_2).abs() < 1e-9);
        let p = 0.61423e6 * (8.0 / 6.0) * (1.0 - 8.0 * (0.625f64).sqrt() / 28.0);
        assert!((t.buckling_load - p).abs() < 1e-6);
    }

    #[test]
    fn terms_positive_on_box() {
        let beam = WeldedBeam::new();
        let mut rng = RngStream::new(99);
        let corners = [
            [0.125, 0.1, 0.1, 0.125],
            [2.0, 10.0, 10.0, 2.0],
            [0.125, 10.0, 0.1, 2.0],
            [2.0, 0.1, 10.0, 0.125],
        ];
        let samples = (0..5000).map(|_| uniform_in_box(beam.bounds(), &mut rng).into_vec());
        for x in corners.iter().map(|c| c.to_vec()).chain(samples) {
            let t = welded_beam_terms(&x);
            for v in [t.sigma, t.q, t.d_half_diag, t.j, t.delta, t.beta, t.alpha, t.tau, t.buckling_load] {
                assert!(v.is_finite() && v > 0.0, "{x:?} -> {t:?}");
            }
            let (f, g) = welded_beam(&x);
            assert!(f[0] > 0.0 && f[1] > 0.0);
            assert!(g.iter().all(|v| v.is_finite()));
        }
    }
}
