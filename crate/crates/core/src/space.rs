//! Decision-space types: finite real vectors and axis-aligned boxes.

use alloc::vec::Vec;
use core::ops::Deref;

use crate::error::{check_dims, Error, Result};
use crate::rng::RngStream;

/// A non-empty vector of finite reals.
#[derive(Debug, Clone, PartialEq)]
pub struct RealVector(Vec<f64>);

impl RealVector {
    pub fn new(components: Vec<f64>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::EmptyVector);
        }
        if let Some(index) = components.iter().position(|c| !c.is_finite()) {
            return Err(Error::NonFinite { index });
        }
        Ok(RealVector(components))
    }

    /// Zero vector of dimension `dim`.
    ///
    /// Panics if `dim` is zero.
    pub fn zeros(dim: usize) -> Self {
        assert!(dim > 0, "RealVector dimension must be positive");
        RealVector(alloc::vec![0.0; dim])
    }

    /// Callers guarantee a non-empty, finite vector.
    pub(crate) fn from_vec_unchecked(components: Vec<f64>) -> Self {
        debug_assert!(!components.is_empty());
        debug_assert!(components.iter().all(|c| c.is_finite()));
        RealVector(components)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub(crate) fn as_mut_slice(&mut self) -> &mut [f64] {
        &mut self.0
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.0
    }
}

impl Deref for RealVector {
    type Target = [f64];

    fn deref(&self) -> &[f64] {
        &self.0
    }
}

impl TryFrom<Vec<f64>> for RealVector {
    type Error = Error;

    fn try_from(v: Vec<f64>) -> Result<Self> {
        RealVector::new(v)
    }
}

/// Box `lower[i] <= x[i] <= upper[i]` with `lower[i] < upper[i]`.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundsBox {
    lower: RealVector,
    upper: RealVector,
}

impl BoundsBox {
    pub fn new(lower: RealVector, upper: RealVector) -> Result<Self> {
        check_dims(lower.dim(), upper.dim())?;
        for (index, (&lo, &hi)) in lower.iter().zip(upper.iter()).enumerate() {
            if lo >= hi {
                return Err(Error::InvalidBounds {
                    index,
                    lower: lo,
                    upper: hi,
                });
            }
        }
        Ok(BoundsBox { lower, upper })
    }

    /// The same interval `[lower, upper]` on every axis.
    pub fn uniform(dim: usize, lower: f64, upper: f64) -> Result<Self> {
        if dim == 0 {
            return Err(Error::EmptyVector);
        }
        BoundsBox::new(
            RealVector::new(alloc::vec![lower; dim])?,
            RealVector::new(alloc::vec![upper; dim])?,
        )
    }

    pub fn dim(&self) -> usize {
        self.lower.dim()
    }

    pub fn lower(&self) -> &RealVector {
        &self.lower
    }

    pub fn upper(&self) -> &RealVector {
        &self.upper
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.dim()
            && x
                .iter()
                .zip(self.lower.iter().zip(self.upper.iter()))
                .all(|(&v, (&lo, &hi))| lo <= v && v <= hi)
    }

    /// Clamps every component onto the box. NaN components land on the lower face.
    pub(crate) fn clamp_in_place(&self, x: &mut [f64]) {
        debug_assert_eq!(x.len(), self.dim());
        for (v, (&lo, &hi)) in x.iter_mut().zip(self.lower.iter().zip(self.upper.iter())) {
            *v = v.max(lo).min(hi);
        }
    }
}

/// Projects `x` onto `b` componentwise.
pub fn clamp_to_bounds(x: &[f64], b: &BoundsBox) -> Result<RealVector> {
    check_dims(b.dim(), x.len())?;
    let mut y = x.to_vec();
    b.clamp_in_place(&mut y);
    Ok(RealVector::from_vec_unchecked(y))
}

/// Independent uniform draw on every axis of `b`.
pub fn uniform_in_box(b: &BoundsBox, rng: &mut RngStream) -> RealVector {
    let x = b
        .lower
        .iter()
        .zip(b.upper.iter())
        .map(|(&lo, &hi)| rng.uniform(lo, hi))
        .collect();
    RealVector::from_vec_unchecked(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn unit(dim: usize) -> BoundsBox {
        BoundsBox::uniform(dim, 0.0, 1.0).unwrap()
    }

    #[test]
    fn clamp_examples() {
        assert_eq!(clamp_to_bounds(&[0.5], &unit(1)).unwrap().as_slice(), &[0.5]);
        assert_eq!(clamp_to_bounds(&[1.2], &unit(1)).unwrap().as_slice(), &[1.0]);
        assert_eq!(
            clamp_to_bounds(&[-3.0, 0.5], &unit(2)).unwrap().as_slice(),
            &[0.0, 0.5]
        );
    }

    #[test]
    fn clamp_dimension_mismatch() {
        assert_eq!(
            clamp_to_bounds(&[0.1, 0.2], &unit(3)),
            Err(Error::DimensionMismatch {
                expected: 3,
                found: 2
            })
        );
    }

    #[test]
    fn clamp_handles_non_finite() {
        let y = clamp_to_bounds(&[f64::INFINITY, f64::NEG_INFINITY, f64::NAN], &unit(3)).unwrap();
        assert_eq!(y.as_slice(), &[1.0, 0.0, 0.0]);
    }

    #[test]
    fn vector_and_bounds_validation() {
        assert_eq!(RealVector::new(vec![]), Err(Error::EmptyVector));
        assert_eq!(
            RealVector::new(vec![1.0, f64::NAN]),
            Err(Error::NonFinite { index: 1 })
        );
        assert!(matches!(
            BoundsBox::uniform(2, 1.0, 1.0),
            Err(Error::InvalidBounds { index: 0, .. })
        ));
        let lo = RealVector::new(vec![0.0]).unwrap();
        let hi = RealVector::new(vec![1.0, 2.0]).unwrap();
        assert!(BoundsBox::new(lo, hi).is_err());
    }

    #[test]
    fn uniform_in_box_narrow_interval() {
        let b = BoundsBox::uniform(4, 2.0, 2.0 + 1e-12).unwrap();
        let x = uniform_in_box(&b, &mut RngStream::new(3));
        assert!(x.iter().all(|&v| (v - 2.0).abs() <= 1e-12));
    }

    #[test]
    fn uniform_in_box_is_deterministic() {
        let b = unit(30);
        let a = uniform_in_box(&b, &mut RngStream::new(42));
        let c = uniform_in_box(&b, &mut RngStream::new(42));
        assert_eq!(a, c);
    }

    #[test]
    fn uniform_in_box_mean() {
        let b = unit(2);
        let mut rng = RngStream::new(7);
        let n = 100_000;
        let mut sums = [0.0; 2];
        for _ in 0..n {
            let x = uniform_in_box(&b, &mut rng);
            sums[0] += x[0];
            sums[1] += x[1];
        }
        for s in sums {
            assert!((s / n as f64 - 0.5).abs() < 0.01);
        }
    }

    proptest! {
        #[test]
        fn clamp_is_idempotent_and_inside(xs in proptest::collection::vec(-10.0f64..10.0, 1..8)) {
            let b = unit(xs.len());
            let once = clamp_to_bounds(&xs, &b).unwrap();
            let twice = clamp_to_bounds(&once, &b).unwrap();
            prop_assert_eq!(&once, &twice);
            prop_assert!(b.contains(&once));
        }

        #[test]
        fn uniform_draws_are_members(seed in any::<u64>(), dim in 1usize..10) {
            let b = BoundsBox::uniform(dim, -2.0, 3.0).unwrap();
            let x = uniform_in_box(&b, &mut RngStream::new(seed));
            prop_assert!(b.contains(&x));
        }
    }
}
