//! Counter-based seed derivation.
//!
//! Every sampled row, pair, or trial draws from a fresh generator seeded as
//! `derive(base, index)`, so samples are independent of evaluation order and
//! prefixes are stable: index `i` yields the same stream no matter how many
//! further indices are drawn.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// SplitMix64 step; decorrelates a base seed and a counter.
pub fn derive(seed: u64, index: u64) -> u64 {
    let mut z = seed
        .wrapping_add(index.wrapping_mul(0x9e37_79b9_7f4a_7c15))
        .wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Deterministic generator for a given seed; identical across platforms.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
