//! Seeded random stream.
//!
//! All draws come from ChaCha8 keyed by a 64-bit seed. Reals are built from the
//! top 53 bits of a `u64` so the sequence is bit-exact across platforms.

use alloc::vec::Vec;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

const UNIT: f64 = 1.0 / (1u64 << 53) as f64;

/// SplitMix64 finalizer.
fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Mixing function used to derive per-run seeds: `seed ^ mix(run, index)`.
pub fn mix(run: u64, index: u64) -> u64 {
    splitmix64(splitmix64(run) ^ index.rotate_left(32))
}

#[derive(Debug, Clone)]
pub struct RngStream {
    seed: u64,
    inner: ChaCha8Rng,
}

impl RngStream {
    pub fn new(seed: u64) -> Self {
        RngStream {
            seed,
            inner: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Independent stream for restart `run`, weight-run `index` under a base seed.
    pub fn derive(seed: u64, run: u64, index: u64) -> Self {
        RngStream::new(seed ^ mix(run, index))
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    /// Uniform in `[0, 1)`.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * UNIT
    }

    /// Uniform in the open interval `(0, 1)`.
    pub fn next_open01(&mut self) -> f64 {
        ((self.next_u64() >> 11) as f64 + 0.5) * UNIT
    }

    /// Uniform in `[a, b)`.
    pub fn uniform(&mut self, a: f64, b: f64) -> f64 {
        a + (b - a) * self.next_f64()
    }

    /// Uniform in `[-1, 1)` on each of `dim` axes.
    pub fn symmetric_vec(&mut self, dim: usize) -> Vec<f64> {
        (0..dim).map(|_| 2.0 * self.next_f64() - 1.0).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_sequence() {
        let mut a = RngStream::new(11);
        let mut b = RngStream::new(11);
        for _ in 0..1000 {
            assert_eq!(a.next_f64().to_bits(), b.next_f64().to_bits());
        }
    }

    #[test]
    fn ranges() {
        let mut r = RngStream::new(5);
        for _ in 0..10_000 {
            let u = r.next_f64();
            assert!((0.0..1.0).contains(&u));
            let o = r.next_open01();
            assert!(o > 0.0 && o < 1.0);
            let v = r.uniform(-3.0, 2.0);
            assert!((-3.0..2.0).contains(&v));
        }
        assert!(r.symmetric_vec(64).iter().all(|e| (-1.0..1.0).contains(e)));
    }

    #[test]
    fn derived_streams_differ() {
        let a = RngStream::derive(1, 0, 0).next_u64();
        let b = RngStream::derive(1, 0, 1).next_u64();
        let c = RngStream::derive(1, 1, 0).next_u64();
        assert_ne!(a, b);
        assert_ne!(a, c);
        assert_ne!(b, c);
        assert_eq!(RngStream::derive(1, 2, 3).seed(), 1 ^ mix(2, 3));
    }
}
