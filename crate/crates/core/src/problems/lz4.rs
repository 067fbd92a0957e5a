use alloc::format;
use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::error::{Error, Result};
use crate::metrics::{FrontShape, TrueFront};
use crate::problems::Problem;
use crate::space::{BoundsBox, RealVector};

pub(crate) const DEFAULT_DIMENSION: usize = 30;

/// `|v| / (1 + exp(2|v|))`.
pub fn lz4_h(v: f64) -> f64 {
    let a = libm::fabs(v);
    a / (1.0 + libm::exp(2.0 * a))
}

/// Residual `u_j = x_j - sin(6 pi x_1 + j pi / d)` for 1-based index `j`.
fn residual(x: &[f64], j: usize) -> f64 {
    let d = x.len() as f64;
    x[j - 1] - libm::sin(6.0 * PI * x[0] + j as f64 * PI / d)
}

/// LZ4 objectives; odd indices `j in [2, d]` feed `f1`, even ones feed `f2`.
pub fn lz4(x: &[f64]) -> [f64; 2] {
    let d = x.len();
    let (mut odd_sum, mut odd_n) = (0.0, 0usize);
    let (mut even_sum, mut even_n) = (0.0, 0usize);
    for j in 2..=d {
        let h = lz4_h(residual(x, j));
        if j % 2 == 1 {
            odd_sum += h;
            odd_n += 1;
        } else {
            even_sum += h;
            even_n += 1;
        }
    }
    let x1 = x[0];
    [
        x1 + 2.0 * odd_sum / odd_n as f64,
        1.0 - x1 * x1 + 2.0 * even_sum / even_n as f64,
    ]
}

/// The Pareto-set point with first coordinate `x1`: `x_j = sin(6 pi x1 + j pi / d)`.
pub fn lz4_pareto_set_point(x1: f64, d: usize) -> RealVector {
    let mut x = Vec::with_capacity(d);
    x.push(x1);
    for j in 2..=d {
        x.push(libm::sin(6.0 * PI * x1 + j as f64 * PI / d as f64));
    }
    RealVector::from_vec_unchecked(x)
}

/// LZ4 on `[0, 1] x [-2, 2]^(d-1)`.
#[derive(Debug, Clone)]
pub struct Lz4 {
    bounds: BoundsBox,
}

impl Lz4 {
    pub fn new(dimension: usize) -> Result<Self> {
        if dimension < 3 {
            return Err(Error::param("dimension", format!("LZ4 needs d >= 3, got {dimension}")));
        }
        let mut lower = alloc::vec![-2.0; dimension];
        let mut upper = alloc::vec![2.0; dimension];
        lower[0] = 0.0;
        upper[0] = 1.0;
        Ok(Lz4 {
            bounds: BoundsBox::new(RealVector::new(lower)?, RealVector::new(upper)?)?,
        })
    }
}

impl Problem for Lz4 {
    fn name(&self) -> &str {
        "lz4"
    }

    fn bounds(&self) -> &BoundsBox {
        &self.bounds
    }

    fn num_objectives(&self) -> usize {
        2
    }

    fn evaluate(&self, x: &[f64], objectives: &mut [f64], _constraints: &mut [f64]) {
        objectives.copy_from_slice(&lz4(x));
    }

    fn true_front(&self) -> Option<TrueFront> {
        Some(TrueFront::ClosedForm(FrontShape::Concave))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn h_examples() {
        assert_eq!(lz4_h(0.0), 0.0);
        // 1 / (1 + e^2)
        assert!((lz4_h(1.0) - 0.119_202_922_022_117_6).abs() < 1e-9);
    }

    #[test]
    fn h_shape() {
        for i in -4000..=4000 {
            let v = i as f64 / 100.0;
            let h = lz4_h(v);
            assert_eq!(h, lz4_h(-v));
            assert!((0.0..0.5).contains(&h));
        }
    }

    #[test]
    fn pareto_set_maps_onto_front() {
        for d in [3, 10, 30] {
            for i in 0..100 {
                let x1 = i as f64 / 99.0;
                let x = lz4_pareto_set_point(x1, d);
                let f = lz4(&x);
                assert!((f[0] - x1).abs() <= 1e-12);
                assert!((f[1] - (1.0 - x1 * x1)).abs() <= 1e-12);
            }
        }
        assert_eq!(lz4(&lz4_pareto_set_point(0.0, 30)), [0.0, 1.0]);
    }

    #[test]
    fn bounds() {
        let p = Lz4::new(30).unwrap();
        assert_eq!(p.bounds().lower()[0], 0.0);
        assert_eq!(p.bounds().upper()[0], 1.0);
        assert_eq!(p.bounds().lower()[1], -2.0);
        assert_eq!(p.bounds().upper()[29], 2.0);
        assert!(p.bounds().contains(&lz4_pareto_set_point(0.3, 30)));
    }
}
