//! The generator behind every sweep.
//!
//! Streams are SplitMix64 (Steele, Lea and Flood 2014): the state advances by
//! `0x9e3779b97f4a7c15` and each output is the state passed through the
//! variant-13 finalizer. Draws below `n` take the high 64 bits of the 128-bit
//! product `next_u64() * n`. A sweep seeds one master stream with the
//! configured seed; instance `i` is generated from the `i`-th master output.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

#[derive(Clone, Debug)]
pub struct Rng(SplitMix64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(SplitMix64::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform-ish in `0..n`; `n` must be positive.
    pub fn below(&mut self, n: usize) -> usize {
        assert!(n > 0, "empty range");
        ((self.next_u64() as u128 * n as u128) >> 64) as usize
    }

    /// Inclusive range.
    pub fn between(&mut self, lo: usize, hi: usize) -> usize {
        lo + self.below(hi - lo + 1)
    }

    pub fn pick<'a, T>(&mut self, items: &'a [T]) -> &'a T {
        &items[self.below(items.len())]
    }

    pub fn coin(&mut self) -> bool {
        self.next_u64() >> 63 == 1
    }
}

/// The first `count` instance seeds of a sweep.
pub fn instance_seeds(master: u64, count: usize) -> Vec<u64> {
    let mut rng = Rng::new(master);
    (0..count).map(|_| rng.next_u64()).collect()
}
