//! Seeded randomness for the randomized strategies and the generators.
//!
//! All randomness goes through [`SelectionRng`], a ChaCha8 stream cipher
//! generator keyed by a 64-bit seed. Independent streams of the same seed are
//! selected with [`SelectionRng::with_stream`], e.g. one stream per connected
//! component. Only fixed-width integer sampling is used, so sequences are
//! identical on 32- and 64-bit targets.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelectionRng {
    inner: ChaCha8Rng,
}

impl SelectionRng {
    pub fn new(seed: u64) -> Self {
        Self::with_stream(seed, 0)
    }

    pub fn with_stream(seed: u64, stream: u64) -> Self {
        let mut inner = ChaCha8Rng::seed_from_u64(seed);
        inner.set_stream(stream);
        Self { inner }
    }

    /// Uniform index in `0..len`.
    ///
    /// # Panics
    ///
    /// Panics if `len == 0`.
    pub fn index(&mut self, len: usize) -> usize {
        self.inner.gen_range(0..len as u64) as usize
    }

    pub fn coin(&mut self) -> bool {
        self.inner.gen::<bool>()
    }

    /// `true` with probability `p`.
    pub fn chance(&mut self, p: f64) -> bool {
        self.inner.gen_bool(p)
    }

    /// Uniform integer in `lo..=hi`.
    pub fn range_inclusive(&mut self, lo: i64, hi: i64) -> i64 {
        self.inner.gen_range(lo..=hi)
    }

    /// Fisher-Yates shuffle using [`Self::index`].
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.index(i + 1);
            items.swap(i, j);
        }
    }
}
