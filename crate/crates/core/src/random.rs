//! Seeded `G(n, m)` sampling.
//!
//! The stream is fully pinned so that other implementations can reproduce
//! it bit for bit:
//!
//! 1. The 64-bit seed is expanded to a 32-byte ChaCha key by four SplitMix64
//!    outputs (increment `0x9E3779B97F4A7C15`, finaliser constants
//!    `0xBF58476D1CE4E5B9` and `0x94D049BB133111EB`), each written
//!    little-endian.
//! 2. Words are drawn from ChaCha with 8 rounds (`ChaCha8Rng`), stream 0,
//!    via `next_u64`.
//! 3. A uniform integer below `bound` takes the first word `x` with
//!    `x < 2^64 - (2^64 mod bound)` and returns `x mod bound`.
//! 4. The `m` pairs are chosen by Floyd's algorithm over the `N = C(n,2)`
//!    pair indices in lexicographic order: for `j` in `N-k .. N`, draw
//!    `t` uniform in `0..=j`; add `t` unless already chosen, else add `j`.
//!    Here `k = m` when `2m ≤ N`; otherwise `k = N - m` and the chosen pairs
//!    are the non-edges.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::bitset::VertexSet;
use crate::graph::{pair_from_index, Graph};
use crate::Error;

/// Default seed for every randomized routine.
pub const DEFAULT_SEED: u64 = 0x5EED_2007_1017;

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

/// One SplitMix64 step: advances `state` and returns the mixed output.
pub fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(GOLDEN);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed for the `index`-th trial of a batch seeded with `seed`.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    let mut s = seed ^ index.wrapping_mul(GOLDEN);
    splitmix64(&mut s)
}

/// The crate's reproducible generator.
pub struct SeededRng(ChaCha8Rng);

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        let mut state = seed;
        let mut key = [0u8; 32];
        for chunk in key.chunks_exact_mut(8) {
            chunk.copy_from_slice(&splitmix64(&mut state).to_le_bytes());
        }
        Self(ChaCha8Rng::from_seed(key))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform in `0..bound` by rejection; `bound` must be positive.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0);
        let zone = u64::MAX - (u64::MAX - bound + 1) % bound;
        loop {
            let x = self.next_u64();
            if x <= zone {
                return x % bound;
            }
        }
    }

    /// Uniform in `[0, 1)` with 53 random bits.
    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

/// Uniformly random graph on `n` vertices with exactly `m` edges.
pub fn random_gnm(n: usize, m: u64, seed: u64) -> Result<Graph, Error> {
    let total = (n as u64) * (n as u64).saturating_sub(1) / 2;
    if m > total {
        return Err(Error::EdgeCountOutOfRange { n, m, max: total });
    }
    let complement = 2 * m > total;
    let k = if complement { total - m } else { m };
    let mut rng = SeededRng::new(seed);
    let mut chosen = VertexSet::empty(total as usize);
    for j in total - k..total {
        let t = rng.below(j + 1);
        if chosen.contains(t as usize) {
            chosen.insert(j as usize);
        } else {
            chosen.insert(t as usize);
        }
    }
    if complement {
        let mut g = Graph::complete(n);
        for idx in chosen.iter() {
            let (u, v) = pair_from_index(n, idx);
            g.remove_edge(u, v)?;
        }
        Ok(g)
    } else {
        Graph::from_edges(n, chosen.iter().map(|idx| pair_from_index(n, idx)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extremes() {
        assert_eq!(random_gnm(5, 10, 1).unwrap(), Graph::complete(5));
        assert_eq!(random_gnm(5, 0, 1).unwrap(), Graph::empty(5));
        assert!(matches!(random_gnm(5, 11, 1), Err(Error::EdgeCountOutOfRange { .. })));
        assert_eq!(random_gnm(0, 0, 1).unwrap().n(), 0);
    }

    #[test]
    fn deterministic_and_exact_count() {
        let a = random_gnm(20, 95, 42).unwrap();
        let b = random_gnm(20, 95, 42).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.edge_count(), 95);
        assert!(a.is_well_formed());
        let c = random_gnm(20, 95, 43).unwrap();
        assert_ne!(a, c);
        for m in [0, 1, 94, 95, 96, 189, 190] {
            assert_eq!(random_gnm(20, m, 7).unwrap().edge_count(), m);
        }
    }

    #[test]
    fn splitmix_reference_values() {
        // First outputs for seed 0 from the SplitMix64 reference implementation.
        let mut s = 0u64;
        assert_eq!(splitmix64(&mut s), 0xE220_A839_7B1D_CDAF);
        assert_eq!(splitmix64(&mut s), 0x6E78_9E6A_A1B9_65F4);
    }

    #[test]
    fn below_is_in_range() {
        let mut rng = SeededRng::new(3);
        for bound in [1u64, 2, 3, 7, 1 << 40, u64::MAX] {
            for _ in 0..100 {
                assert!(rng.below(bound) < bound);
            }
        }
    }
}
