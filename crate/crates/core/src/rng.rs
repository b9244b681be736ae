//! Seed handling. Every random choice in the crate is driven by a
//! `ChaCha8Rng` built from a `u64` seed; sub-streams are derived by mixing
//! the parent seed with a stream index so results do not depend on the
//! order in which streams are consumed.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type Rng = ChaCha8Rng;

pub const DEFAULT_SEED: u64 = 42;

pub fn rng_from_seed(seed: u64) -> Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// SplitMix64 finalizer applied to `seed ^ golden * (stream + 1)`.
pub fn derive_seed(seed: u64, stream: u64) -> u64 {
    let mut z = seed ^ 0x9E37_79B9_7F4A_7C15u64.wrapping_mul(stream.wrapping_add(1));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Named streams so that different pipeline stages never share randomness.
pub mod stream {
    pub const PLM: u64 = 1;
    pub const COMMUNITY_CHAINS: u64 = 2;
    pub const GLOBAL_CHAIN: u64 = 3;
    pub const REWIRE: u64 = 4;
    pub const GENERATOR: u64 = 5;
    pub const INITIATOR: u64 = 6;
    pub const SAMPLING: u64 = 7;
}
