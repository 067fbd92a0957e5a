use alloc::format;

use crate::error::{Error, Result};
use crate::metrics::{build_zdt3_front, FrontShape, TrueFront, DEFAULT_ZDT3_SAMPLES};
use crate::problems::Problem;
use crate::space::BoundsBox;

pub(crate) const DEFAULT_DIMENSION: usize = 30;

/// `1 + 9 * sum(x[1..]) / (d - 1)`.
pub fn zdt_g(x: &[f64]) -> f64 {
    let tail: f64 = x[1..].iter().sum();
    1.0 + 9.0 * tail / (x.len() - 1) as f64
}

pub fn zdt1(x: &[f64]) -> [f64; 2] {
    let f1 = x[0];
    let g = zdt_g(x);
    [f1, g * (1.0 - libm::sqrt(f1 / g))]
}

/// Standard form `g (1 - (f1/g)^2)`, whose front is `1 - f1^2`.
pub fn zdt2(x: &[f64]) -> [f64; 2] {
    let f1 = x[0];
    let g = zdt_g(x);
    let r = f1 / g;
    [f1, g * (1.0 - r * r)]
}

pub fn zdt3(x: &[f64]) -> [f64; 2] {
    let f1 = x[0];
    let g = zdt_g(x);
    let r = f1 / g;
    let wave = libm::sin(10.0 * core::f64::consts::PI * f1);
    [f1, g * (1.0 - libm::sqrt(r) - r * wave)]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZdtVariant {
    Zdt1,
    Zdt2,
    Zdt3,
}

/// ZDT problem on `[0, 1]^d`.
#[derive(Debug, Clone)]
pub struct Zdt {
    variant: ZdtVariant,
    bounds: BoundsBox,
}

impl Zdt {
    pub fn new(variant: ZdtVariant, dimension: usize) -> Result<Self> {
        if dimension < 2 {
            return Err(Error::param("dimension", format!("ZDT needs d >= 2, got {dimension}")));
        }
        Ok(Zdt {
            variant,
            bounds: BoundsBox::uniform(dimension, 0.0, 1.0)?,
        })
    }

    pub fn variant(&self) -> ZdtVariant {
        self.variant
    }
}

impl Problem for Zdt {
    fn name(&self) -> &str {
        match self.variant {
            ZdtVariant::Zdt1 => "zdt1",
            ZdtVariant::Zdt2 => "zdt2",
            ZdtVariant::Zdt3 => "zdt3",
        }
    }

    fn bounds(&self) -> &BoundsBox {
        &self.bounds
    }

    fn num_objectives(&self) -> usize {
        2
    }

    fn evaluate(&self, x: &[f64], objectives: &mut [f64], _constraints: &mut [f64]) {
        let f = match self.variant {
            ZdtVariant::Zdt1 => zdt1(x),
            ZdtVariant::Zdt2 => zdt2(x),
            ZdtVariant::Zdt3 => zdt3(x),
        };
        objectives.copy_from_slice(&f);
    }

    fn true_front(&self) -> Option<TrueFront> {
        Some(match self.variant {
            ZdtVariant::Zdt1 => TrueFront::ClosedForm(FrontShape::Convex),
            ZdtVariant::Zdt2 => TrueFront::ClosedForm(FrontShape::Concave),
            ZdtVariant::Zdt3 => build_zdt3_front(DEFAULT_ZDT3_SAMPLES).expect("grid size is valid"),
        })
    }
}
