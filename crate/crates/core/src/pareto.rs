//! Pareto dominance, weighted-sum scalarization and the non-dominated archive.
//!
//! All objectives are minimized.

use alloc::vec::Vec;
use core::ops::Deref;

use crate::error::{check_dims, Error, Result};
use crate::rng::RngStream;
use crate::space::RealVector;

/// `K >= 1` finite objective values.
#[derive(Debug, Clone, PartialEq)]
pub struct ObjectiveVector(Vec<f64>);

impl ObjectiveVector {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyVector);
        }
        if let Some(index) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite { index });
        }
        Ok(ObjectiveVector(values))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }
}

impl Deref for ObjectiveVector {
    type Target = [f64];

    fn deref(&self) -> &[f64] {
        &self.0
    }
}

/// Nonnegative weights summing to one.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector(Vec<f64>);

/// Allowed deviation of the weight sum from one.
pub const WEIGHT_SUM_TOLERANCE: f64 = 1e-12;

impl WeightVector {
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidWeights("no weights"));
        }
        if weights.iter().any(|w| !(w.is_finite() && *w >= 0.0)) {
            return Err(Error::InvalidWeights("weights must be finite and nonnegative"));
        }
        let sum: f64 = weights.iter().sum();
        if (sum - 1.0).abs() > WEIGHT_SUM_TOLERANCE {
            return Err(Error::InvalidWeights("weights must sum to 1"));
        }
        Ok(WeightVector(weights))
    }

    /// Normalizes positive draws by their sum.
    pub fn from_draws(draws: &[f64]) -> Result<Self> {
        let sum: f64 = draws.iter().sum();
        if !(sum > 0.0 && sum.is_finite()) {
            return Err(Error::InvalidWeights("draws must have a positive finite sum"));
        }
        WeightVector::new(draws.iter().map(|d| d / sum).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }
}

impl Deref for WeightVector {
    type Target = [f64];

    fn deref(&self) -> &[f64] {
        &self.0
    }
}

/// `K` independent uniforms on `(0, 1)`, normalized by their sum.
pub fn sample_weights(k: usize, rng: &mut RngStream) -> Result<WeightVector> {
    if k == 0 {
        return Err(Error::InvalidWeights("K must be at least 1"));
    }
    let draws: Vec<f64> = (0..k).map(|_| rng.next_open01()).collect();
    WeightVector::from_draws(&draws)
}

pub(crate) fn weighted_sum(f: &[f64], w: &[f64]) -> f64 {
    f.iter().zip(w).map(|(a, b)| a * b).sum()
}

/// `sum_k w_k f_k`.
pub fn scalarize(f: &[f64], w: &WeightVector) -> Result<f64> {
    check_dims(w.len(), f.len())?;
    Ok(weighted_sum(f, w))
}

/// Unchecked dominance on equal-length slices.
pub fn dominates_slices(u: &[f64], v: &[f64]) -> bool {
    debug_assert_eq!(u.len(), v.len());
    let mut strictly = false;
    for (a, b) in u.iter().zip(v) {
        if a > b {
            return false;
        }
        if a < b {
            strictly = true;
        }
    }
    strictly
}

/// True iff `u` is no worse than `v` everywhere and strictly better somewhere.
pub fn dominates(u: &[f64], v: &[f64]) -> Result<bool> {
    check_dims(u.len(), v.len())?;
    Ok(dominates_slices(u, v))
}

/// Dominance or equality.
pub fn weakly_dominates(u: &[f64], v: &[f64]) -> Result<bool> {
    check_dims(u.len(), v.len())?;
    Ok(u.iter().zip(v).all(|(a, b)| a <= b))
}

#[derive(Debug, Clone, PartialEq)]
pub struct ArchiveEntry {
    pub decision: RealVector,
    pub objectives: ObjectiveVector,
}

/// A set of mutually non-dominated entries with distinct objective vectors.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ParetoArchive {
    entries: Vec<ArchiveEntry>,
}

impl ParetoArchive {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn entries(&self) -> &[ArchiveEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn num_objectives(&self) -> Option<usize> {
        self.entries.first().map(|e| e.objectives.len())
    }

    /// Inserts `(decision, f)` unless an entry weakly dominates `f`; evicts
    /// every entry `f` dominates. Returns whether the entry was added.
    pub fn insert(&mut self, decision: RealVector, f: ObjectiveVector) -> Result<bool> {
        if let Some(k) = self.num_objectives() {
            check_dims(k, f.len())?;
        }
        if self
            .entries
            .iter()
            .any(|e| e.objectives.iter().zip(f.iter()).all(|(a, b)| a <= b))
        {
            return Ok(false);
        }
        self.entries.retain(|e| !dominates_slices(&f, &e.objectives));
        self.entries.push(ArchiveEntry {
            decision,
            objectives: f,
        });
        Ok(true)
    }

    pub fn into_entries(self) -> Vec<ArchiveEntry> {
        self.entries
    }
}

/// Non-dominated subset of the union of `archives`.
pub fn merge_archives(archives: &[ParetoArchive]) -> Result<ParetoArchive> {
    let mut dims = archives.iter().filter_map(ParetoArchive::num_objectives);
    if let Some(k) = dims.next() {
        for other in dims {
            check_dims(k, other)?;
        }
    }
    let mut merged = ParetoArchive::new();
    for entry in archives.iter().flat_map(|a| a.entries.iter()) {
        merged.insert(entry.decision.clone(), entry.objectives.clone())?;
    }
    Ok(merged)
}

/// Indices of the non-dominated points, keeping the first of any duplicates.
pub fn non_dominated_indices(points: &[&[f64]]) -> Vec<usize> {
    let mut kept: Vec<usize> = Vec::new();
    for (i, p) in points.iter().enumerate() {
        if kept
            .iter()
            .any(|&k| points[k].iter().zip(p.iter()).all(|(a, b)| a <= b))
        {
            continue;
        }
        kept.retain(|&k| !dominates_slices(p, points[k]));
        kept.push(i);
    }
    kept
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn ov(v: &[f64]) -> ObjectiveVector {
        ObjectiveVector::new(v.to_vec()).unwrap()
    }

    fn dummy() -> RealVector {
        RealVector::zeros(1)
    }

    fn archive_of(points: &[&[f64]]) -> ParetoArchive {
        let mut a = ParetoArchive::new();
        for p in points {
            a.insert(dummy(), ov(p)).unwrap();
        }
        a
    }

    fn objective_set(a: &ParetoArchive) -> Vec<Vec<f64>> {
        let mut v: Vec<Vec<f64>> = a.entries().iter().map(|e| e.objectives.to_vec()).collect();
        v.sort_by(|x, y| x.partial_cmp(y).unwrap());
        v
    }

    /// Pairwise filter, duplicates collapsed.
    fn brute_force_front(points: &[Vec<f64>]) -> Vec<Vec<f64>> {
        let mut out: Vec<Vec<f64>> = points
            .iter()
            .filter(|p| !points.iter().any(|q| dominates_slices(q, p)))
            .cloned()
            .collect();
        out.sort_by(|x, y| x.partial_cmp(y).unwrap());
        out.dedup();
        out
    }

    #[test]
    fn dominance_examples() {
        assert!(dominates(&[1.0, 2.0], &[2.0, 3.0]).unwrap());
        assert!(!dominates(&[1.0, 2.0], &[1.0, 2.0]).unwrap());
        assert!(!dominates(&[1.0, 3.0], &[2.0, 1.0]).unwrap());
        assert!(!dominates(&[2.0, 1.0], &[1.0, 3.0]).unwrap());
        assert!(weakly_dominates(&[1.0, 2.0], &[1.0, 2.0]).unwrap());
        assert!(weakly_dominates(&[1.0, 2.0], &[2.0, 3.0]).unwrap());
        assert!(!weakly_dominates(&[2.0, 1.0], &[1.0, 2.0]).unwrap());
        assert!(dominates(&[1.0], &[1.0, 2.0]).is_err());
        assert!(weakly_dominates(&[1.0], &[1.0, 2.0]).is_err());
    }

    #[test]
    fn weight_examples() {
        let mut rng = RngStream::new(1);
        assert_eq!(sample_weights(1, &mut rng).unwrap().as_slice(), &[1.0]);
        assert_eq!(WeightVector::from_draws(&[0.3, 0.7]).unwrap().as_slice(), &[0.3, 0.7]);
        let w = WeightVector::from_draws(&[0.2, 0.6]).unwrap();
        assert!((w[0] - 0.25).abs() < 1e-12 && (w[1] - 0.75).abs() < 1e-12);
        assert!(sample_weights(0, &mut rng).is_err());
        assert!(WeightVector::new(vec![0.5, 0.6]).is_err());
        assert!(WeightVector::new(vec![-0.5, 1.5]).is_err());
    }

    #[test]
    fn scalarize_examples() {
        let w = |v: &[f64]| WeightVector::new(v.to_vec()).unwrap();
        assert_eq!(scalarize(&[3.0, 7.0], &w(&[1.0, 0.0])).unwrap(), 3.0);
        assert_eq!(scalarize(&[2.0, 4.0], &w(&[0.5, 0.5])).unwrap(), 3.0);
        assert_eq!(scalarize(&[4.0, 0.0], &w(&[0.25, 0.75])).unwrap(), 1.0);
        assert!(scalarize(&[1.0], &w(&[0.5, 0.5])).is_err());
    }

    #[test]
    fn archive_examples() {
        let mut a = archive_of(&[&[1.0, 1.0]]);
        assert!(!a.insert(dummy(), ov(&[2.0, 2.0])).unwrap());
        assert_eq!(a.len(), 1);

        let mut a = archive_of(&[&[1.0, 3.0], &[3.0, 1.0]]);
        assert!(a.insert(dummy(), ov(&[0.0, 0.0])).unwrap());
        assert_eq!(objective_set(&a), vec![vec![0.0, 0.0]]);

        let mut a = archive_of(&[&[1.0, 3.0]]);
        a.insert(dummy(), ov(&[3.0, 1.0])).unwrap();
        assert_eq!(a.len(), 2);

        // duplicates keep the first decision
        let mut a = ParetoArchive::new();
        a.insert(RealVector::new(vec![1.0]).unwrap(), ov(&[1.0, 1.0])).unwrap();
        assert!(!a.insert(RealVector::new(vec![2.0]).unwrap(), ov(&[1.0, 1.0])).unwrap());
        assert_eq!(a.entries()[0].decision[0], 1.0);

        assert!(a.insert(dummy(), ov(&[1.0, 1.0, 1.0])).is_err());
    }

    #[test]
    fn merge_examples() {
        let a = archive_of(&[&[1.0, 3.0], &[3.0, 1.0]]);
        assert_eq!(merge_archives(&[a.clone(), ParetoArchive::new()]).unwrap(), a);
        let x = archive_of(&[&[1.0, 1.0]]);
        let y = archive_of(&[&[2.0, 2.0]]);
        assert_eq!(merge_archives(&[y, x]).unwrap().len(), 1);
        let z = archive_of(&[&[1.0, 1.0, 1.0]]);
        assert!(merge_archives(&[a, z]).is_err());
    }

    #[test]
    fn ten_thousand_random_inserts_stay_non_dominated() {
        let mut rng = RngStream::new(2024);
        let mut a = ParetoArchive::new();
        for _ in 0..10_000 {
            // coarse grid to exercise duplicates and ties
            let f = [
                (rng.next_f64() * 50.0).floor(),
                (rng.next_f64() * 50.0).floor(),
                (rng.next_f64() * 50.0).floor(),
            ];
            a.insert(dummy(), ov(&f)).unwrap();
        }
        let e = a.entries();
        for i in 0..e.len() {
            for j in 0..e.len() {
                if i != j {
                    assert!(!dominates_slices(&e[i].objectives, &e[j].objectives));
                    assert_ne!(e[i].objectives, e[j].objectives);
                }
            }
        }
    }

    fn point() -> impl Strategy<Value = Vec<f64>> {
        proptest::collection::vec((0u8..6).prop_map(f64::from), 2)
    }

    proptest! {
        #[test]
        fn strict_partial_order(u in point(), v in point(), w in point()) {
            prop_assert!(!dominates_slices(&u, &u));
            if dominates_slices(&u, &v) {
                prop_assert!(!dominates_slices(&v, &u));
                if dominates_slices(&v, &w) {
                    prop_assert!(dominates_slices(&u, &w));
                }
            }
        }

        #[test]
        fn weak_order_reflexive_transitive(u in point(), v in point(), w in point()) {
            prop_assert!(weakly_dominates(&u, &u).unwrap());
            if weakly_dominates(&u, &v).unwrap() && weakly_dominates(&v, &w).unwrap() {
                prop_assert!(weakly_dominates(&u, &w).unwrap());
            }
        }

        #[test]
        fn merge_is_order_independent(
            xs in proptest::collection::vec(point(), 10),
            ys in proptest::collection::vec(point(), 10),
        ) {
            let x = archive_of(&xs.iter().map(Vec::as_slice).collect::<Vec<_>>());
            let y = archive_of(&ys.iter().map(Vec::as_slice).collect::<Vec<_>>());
            let xy = objective_set(&merge_archives(&[x.clone(), y.clone()]).unwrap());
            let yx = objective_set(&merge_archives(&[y, x]).unwrap());
            let all: Vec<Vec<f64>> = xs.iter().chain(ys.iter()).cloned().collect();
            prop_assert_eq!(&xy, &yx);
            prop_assert_eq!(&xy, &brute_force_front(&all));
        }

        #[test]
        fn insertion_order_independent(mut pts in proptest::collection::vec(point(), 1..20), seed in any::<u64>()) {
            let forward = objective_set(&archive_of(&pts.iter().map(Vec::as_slice).collect::<Vec<_>>()));
            let mut rng = RngStream::new(seed);
            for i in (1..pts.len()).rev() {
                pts.swap(i, (rng.next_u64() % (i as u64 + 1)) as usize);
            }
            let shuffled = objective_set(&archive_of(&pts.iter().map(Vec::as_slice).collect::<Vec<_>>()));
            prop_assert_eq!(forward, shuffled);
        }

        #[test]
        fn scalarize_is_linear(f in proptest::collection::vec(-10.0f64..10.0, 3), g in proptest::collection::vec(-10.0f64..10.0, 3), seed in any::<u64>()) {
            let w = sample_weights(3, &mut RngStream::new(seed)).unwrap();
            let fg: Vec<f64> = f.iter().zip(&g).map(|(a, b)| a + b).collect();
            let lhs = scalarize(&fg, &w).unwrap();
            let rhs = scalarize(&f, &w).unwrap() + scalarize(&g, &w).unwrap();
            prop_assert!((lhs - rhs).abs() < 1e-12);
        }

        #[test]
        fn shift_preserves_argmin(cands in proptest::collection::vec(proptest::collection::vec(-10.0f64..10.0, 2), 1..10), c in -5.0f64..5.0, seed in any::<u64>()) {
            let w = sample_weights(2, &mut RngStream::new(seed)).unwrap();
            let argmin = |cs: &Vec<Vec<f64>>| {
                let vals: Vec<f64> = cs.iter().map(|f| scalarize(f, &w).unwrap()).collect();
                let mut best = 0;
                for i in 1..vals.len() {
                    if vals[i] < vals[best] { best = i; }
                }
                (best, vals)
            };
            let shifted: Vec<Vec<f64>> = cands.iter().map(|f| f.iter().map(|v| v + c).collect()).collect();
            let (i0, v0) = argmin(&cands);
            let (i1, v1) = argmin(&shifted);
            for (a, b) in v0.iter().zip(&v1) {
                prop_assert!((b - a - c).abs() < 1e-9);
            }
            prop_assert!((v0[i0] - v0[i1]).abs() < 1e-9);
        }

        #[test]
        fn sampled_weights_are_valid(k in 1usize..8, seed in any::<u64>()) {
            let w = sample_weights(k, &mut RngStream::new(seed)).unwrap();
            prop_assert_eq!(w.len(), k);
            prop_assert!(w.iter().all(|&x| x >= 0.0));
            prop_assert!((w.iter().sum::<f64>() - 1.0).abs() <= WEIGHT_SUM_TOLERANCE);
        }
    }
}
