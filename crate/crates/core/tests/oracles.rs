//! Problem and metric values checked against straightforward re-derivations,
//! plus archive and determinism properties through the public API.

use moba_core::moba::run_weight;
use moba_core::pareto::{dominates_slices, merge_archives};
use moba_core::problems::{lz4, welded_beam, zdt1, zdt2, zdt3};
use moba_core::{
    front_error, problem_by_name, run_moba, BatParams, MobaOptions, ObjectiveVector,
    ParetoArchive, RealVector, TrueFront,
};
use proptest::prelude::*;
use std::f64::consts::PI;

fn g_zdt(x: &[f64]) -> f64 {
    1.0 + 9.0 * x[1..].iter().sum::<f64>() / (x.len() - 1) as f64
}

fn oracle_zdt(variant: u8, x: &[f64]) -> [f64; 2] {
    let (f1, g) = (x[0], g_zdt(x));
    let r = f1 / g;
    let h = match variant {
        1 => 1.0 - r.sqrt(),
        2 => 1.0 - r * r,
        _ => 1.0 - r.sqrt() - r * (10.0 * PI * f1).sin(),
    };
    [f1, g * h]
}

fn oracle_beam(x: &[f64]) -> [f64; 2] {
    let (w, l, d, h) = (x[0], x[1], x[2], x[3]);
    [
        1.10471 * w * w * l + 0.04811 * d * h * (14.0 + l),
        2.1952 / (d * d * d * h),
    ]
}

fn unit_vec(len: usize) -> impl Strategy<Value = Vec<f64>> {
    proptest::collection::vec(0.0..=1.0f64, len)
}

proptest! {
    #[test]
    fn zdt_matches_oracle(x in unit_vec(30)) {
        for (v, f) in [(1u8, zdt1(&x)), (2, zdt2(&x)), (3, zdt3(&x))] {
            let o = oracle_zdt(v, &x);
            prop_assert!((f[0] - o[0]).abs() <= 1e-12 && (f[1] - o[1]).abs() <= 1e-9 * o[1].abs().max(1.0));
        }
    }

    #[test]
    fn beam_objectives_match_oracle(
        w in 0.1..2.0f64, l in 0.1..10.0f64, d in 0.1..10.0f64, h in 0.1..2.0f64
    ) {
        let x = [w, l, d, h];
        let (f, _) = welded_beam(&x);
        let o = oracle_beam(&x);
        prop_assert!((f[0] - o[0]).abs() <= 1e-12 * o[0]);
        prop_assert!((f[1] - o[1]).abs() <= 1e-12 * o[1]);
    }

    #[test]
    fn lz4_objectives_bounded_below_by_front(x in unit_vec(30)) {
        // x2..xd sit in [-1, 1]; map the unit draws there
        let mut y = x.clone();
        for v in &mut y[1..] {
            *v = 2.0 * *v - 1.0;
        }
        let f = lz4(&y);
        prop_assert!(f[0] >= y[0] && f[1] >= 1.0 - f[0] * f[0] - 1e-12);
    }

    #[test]
    fn merge_is_order_free(points in proptest::collection::vec((0u8..6, 0u8..6), 1..12), split in 0usize..12) {
        let pts: Vec<[f64; 2]> = points.iter().map(|&(a, b)| [a as f64, b as f64]).collect();
        let split = split.min(pts.len());
        let build = |s: &[[f64; 2]]| {
            let mut a = ParetoArchive::new();
            for p in s {
                a.insert(RealVector::zeros(1), ObjectiveVector::new(p.to_vec()).unwrap()).unwrap();
            }
            a
        };
        let (a, b) = (build(&pts[..split]), build(&pts[split..]));
        let key = |x: &ParetoArchive| {
            let mut v: Vec<Vec<f64>> = x.entries().iter().map(|e| e.objectives.to_vec()).collect();
            v.sort_by(|p, q| p.partial_cmp(q).unwrap());
            v
        };
        let ab = key(&merge_archives(&[a.clone(), b.clone()]).unwrap());
        prop_assert_eq!(&ab, &key(&merge_archives(&[b, a]).unwrap()));
        for p in &ab {
            prop_assert!(!pts.iter().any(|q| dominates_slices(q, p)));
        }
    }
}

#[test]
fn closed_form_residuals() {
    let convex = TrueFront::ClosedForm(moba_core::metrics::FrontShape::Convex);
    let mut a = ParetoArchive::new();
    for (f1, off) in [(0.04, 0.1), (0.64, -0.05)] {
        let f2 = 1.0 - f64::sqrt(f1) + off;
        a.insert(RealVector::zeros(1), ObjectiveVector::new(vec![f1, f2]).unwrap())
            .unwrap();
    }
    let e = front_error(&a, &convex).unwrap();
    assert!((e.raw - (0.01 + 0.0025)).abs() < 1e-15);
    assert!((e.per_point - 0.00625).abs() < 1e-15);
}

#[test]
fn weight_runs_are_reproducible_and_independent_of_order() {
    let problem = problem_by_name("zdt2", Some(8)).unwrap();
    let p = BatParams {
        population_size: 15,
        max_iterations: 60,
        seed: 11,
        ..BatParams::default()
    };
    let opts = MobaOptions {
        n_points: 6,
        ..MobaOptions::for_problem(problem.as_ref())
    };
    let forward: Vec<_> = (0..6)
        .map(|j| run_weight(problem.as_ref(), &p, &opts, j).unwrap())
        .collect();
    let mut backward: Vec<_> = (0..6)
        .rev()
        .map(|j| run_weight(problem.as_ref(), &p, &opts, j).unwrap())
        .collect();
    backward.reverse();
    assert_eq!(forward, backward);

    let a = run_moba(problem.as_ref(), &p, &opts).unwrap();
    let b = run_moba(problem.as_ref(), &p, &opts).unwrap();
    assert_eq!(a.archive, b.archive);
}

#[test]
fn welded_beam_archive_is_feasible() {
    let problem = problem_by_name("welded-beam", None).unwrap();
    let p = BatParams {
        population_size: 20,
        max_iterations: 150,
        seed: 3,
        ..BatParams::default()
    };
    let opts = MobaOptions {
        n_points: 8,
        ..MobaOptions::for_problem(problem.as_ref())
    };
    let out = run_moba(problem.as_ref(), &p, &opts).unwrap();
    for e in out.archive.entries() {
        assert!(problem.is_feasible(&e.decision));
        let o = oracle_beam(&e.decision);
        assert!((e.objectives[0] - o[0]).abs() <= 1e-12 * o[0]);
    }
}
